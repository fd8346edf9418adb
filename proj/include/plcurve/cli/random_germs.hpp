#ifndef PLCURVE_CLI_RANDOM_GERMS_HPP
#define PLCURVE_CLI_RANDOM_GERMS_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "plcurve/branch.hpp"

namespace plcurve::cli {

/// SplitMix64. Its output sequence is fixed by the algorithm, so seeded runs
/// reproduce on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

struct RandomGermSpec {
  std::size_t max_branches = 3;
  std::size_t max_exponent = 7;
  std::size_t max_terms = 2;  // per coordinate
  std::int64_t coefficient_bound = 3;
};

/// Seed of the index-th item of a batch.
std::uint64_t item_seed(std::uint64_t batch_seed, std::size_t index);

/// Random polynomial germ, rejection-sampled until it passes validate_germ
/// and every branch meets the origin only at t = 0.
CurveGerm random_germ(std::uint64_t seed, const RandomGermSpec& spec = {}, const std::string& name = "random");

}  // namespace plcurve::cli

#endif  // PLCURVE_CLI_RANDOM_GERMS_HPP
