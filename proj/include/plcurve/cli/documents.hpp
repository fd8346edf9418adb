#ifndef PLCURVE_CLI_DOCUMENTS_HPP
#define PLCURVE_CLI_DOCUMENTS_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "plcurve/branch.hpp"
#include "plcurve/euler_ledger.hpp"

namespace plcurve::cli {

/// A germ file: one JSON object
///
///   {"name": "cusp",
///    "precision_hint": 16,
///    "branches": [{"label": "a", "x": [[1, 1, 2]], "y": [[1, 1, 3]]}]}
///
/// where every term is [numerator, denominator > 0, exponent]. Numerators and
/// denominators may also be decimal strings for integers beyond 64 bits. A
/// branch with a "precision" field is a series known modulo t^precision.
struct GermDocument {
  CurveGerm germ;
  std::optional<std::size_t> precision_hint;
};

/// Throws AnalysisError(invalid_input) with the line and column of a syntax
/// error, or the branch and term a bad value came from.
GermDocument parse_germ_document(const std::string& text);
std::string serialize_germ_document(const GermDocument& doc, bool pretty = true);

bool same_document(const GermDocument& a, const GermDocument& b);

/// A stratum table file:
///
///   {"n": 2, "r": 1, "chi_Xk": {"2": 1}, "upstairs": [0],
///    "isolated_flag": true, "s": 0}
///
/// The table is validated before it is returned.
StratumTable parse_ledger_document(const std::string& text);
std::string serialize_ledger_document(const StratumTable& table);

/// Whole file as a string; throws AnalysisError(invalid_input) when unreadable.
std::string read_file(const std::string& path);

}  // namespace plcurve::cli

#endif  // PLCURVE_CLI_DOCUMENTS_HPP
