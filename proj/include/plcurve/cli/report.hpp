#ifndef PLCURVE_CLI_REPORT_HPP
#define PLCURVE_CLI_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plcurve/branch_analysis.hpp"
#include "plcurve/implicit_oracle.hpp"

namespace plcurve::cli {

struct AnalyzeOptions {
  bool oracle = false;
  PrecisionPolicy precision;
  OraclePolicy oracle_policy;
};

struct CheckVerdict {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct OracleOutcome {
  std::string equation;
  LocalAlgebraResult local_algebra;
};

/// Nodes-only unfolding of the germ read through the Euler ledger.
struct LedgerOutcome {
  std::int64_t mu_isolated = 0;
  std::int64_t recovered_mu = 0;  // mu_isolated + delta
};

struct Report {
  InvariantReport invariants;
  std::optional<OracleOutcome> oracle;
  LedgerOutcome ledger;
  std::vector<CheckVerdict> checks;
  double wall_seconds = 0;

  bool consistent() const { return invariants.consistent; }
};

/// Runs the parameterized channel, the ledger specialization and, when asked,
/// the implicit oracle. Throws AnalysisError for invalid input, exhausted
/// caps, oracle refusals and route disagreements inside a computation;
/// disagreements between finished channels are recorded as failed checks.
Report build_report(const CurveGerm& germ, const AnalyzeOptions& options);

std::string render_text(const Report& report);
/// Deterministic; wall time is only written when include_timing is set.
std::string render_json(const Report& report, bool include_timing);

/// "t^2 - 1/2*t^5", with " + O(t^N)" for series branches.
std::string coordinate_str(const Branch& b, bool x);

}  // namespace plcurve::cli

#endif  // PLCURVE_CLI_REPORT_HPP
