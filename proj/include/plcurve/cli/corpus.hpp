#ifndef PLCURVE_CLI_CORPUS_HPP
#define PLCURVE_CLI_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "plcurve/branch.hpp"

namespace plcurve::cli {

struct CorpusEntry {
  CurveGerm germ;
  std::size_t r = 0;
  std::size_t delta = 0;
  std::int64_t mu = 0;
};

/// The classical plane curve germs with their frozen invariants. The Milnor
/// numbers were computed from the implicit equations by an independent
/// Groebner-basis count before being recorded here.
const std::vector<CorpusEntry>& classical_corpus();

}  // namespace plcurve::cli

#endif  // PLCURVE_CLI_CORPUS_HPP
