#include "plcurve/cli/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "plcurve/euler_ledger.hpp"

namespace plcurve::cli {
namespace {

using nlohmann::ordered_json;

std::string join(const std::vector<std::size_t>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
  return out.str();
}

std::string terms_str(const TruncatedSeries::Terms& terms) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rat magnitude = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out << "-";
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = magnitude == Rat(1);
    if (!unit || e == 0) out << magnitude.str();
    if (e == 0) continue;
    if (!unit) out << "*";
    out << "t";
    if (e > 1) out << "^" << e;
  }
  return out.str();
}

CheckVerdict equality_check(std::string name, std::int64_t a, std::int64_t b, const std::string& what_a,
                            const std::string& what_b) {
  std::string detail = what_a + " = " + std::to_string(a) + ", " + what_b + " = " + std::to_string(b);
  return {std::move(name), a == b, std::move(detail)};
}

}  // namespace

std::string coordinate_str(const Branch& b, bool x) {
  std::string s = terms_str(x ? b.x_terms() : b.y_terms());
  if (!b.is_polynomial()) s += " + O(t^" + std::to_string(b.known_precision()) + ")";
  return s;
}

Report build_report(const CurveGerm& germ, const AnalyzeOptions& options) {
  auto start = std::chrono::steady_clock::now();
  Report report;
  InvariantReport& inv = report.invariants;
  inv = analyze_germ(germ, options.precision);

  const auto r = static_cast<std::int64_t>(inv.r);
  const auto delta = static_cast<std::int64_t>(inv.delta_total);
  report.ledger.mu_isolated = mu_isolated(nodes_only_table(r, delta));
  report.ledger.recovered_mu = report.ledger.mu_isolated + delta;

  report.checks.push_back(equality_check("two-channel delta", delta, static_cast<std::int64_t>(inv.cokernel_delta),
                                         "delta_total", "cokernel"));
  report.checks.push_back(equality_check("ledger decomposition", report.ledger.recovered_mu, inv.mu_parameterized,
                                         "mu_isolated + delta", "2*delta - r + 1"));

  if (options.oracle) {
    ImplicitCurve curve = implicitize_curve(germ);
    OracleOutcome oracle{curve.g.str(), milnor_implicit(curve.g, options.oracle_policy)};
    inv.oracle_mu = oracle.local_algebra.dimension;
    inv.oracle_degree = oracle.local_algebra.stable_degree;
    inv.implicit_equation = oracle.equation;
    report.checks.push_back(equality_check("oracle identity", inv.mu_parameterized,
                                           static_cast<std::int64_t>(*inv.oracle_mu), "2*delta - r + 1",
                                           "dim O/(g_x, g_y)"));
    report.oracle = std::move(oracle);
  }

  bool all = true;
  for (const auto& c : report.checks) all = all && c.passed;
  inv.consistent = all;
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string render_text(const Report& report) {
  const InvariantReport& inv = report.invariants;
  std::ostringstream out;
  out << "germ " << inv.name << "\n";
  out << "  branches r = " << inv.r << "\n";
  for (const auto& b : inv.per_branch) {
    out << "  branch " << b.label << ": multiplicity " << b.multiplicity << ", delta " << b.delta()
        << ", conductor " << b.semigroup.conductor << ", gaps {" << join(b.semigroup.gaps) << "}\n";
  }
  if (inv.r > 1) {
    out << "  intersection multiplicities\n";
    for (std::size_t i = 0; i < inv.r; ++i) {
      out << "   ";
      for (std::size_t j = 0; j < inv.r; ++j) {
        const auto& v = inv.intersection_matrix[i][j];
        out << " " << (v ? std::to_string(*v) : std::string("-"));
      }
      out << "\n";
    }
  }
  out << "  delta = " << inv.delta_total << "\n";
  out << "  mu = 2*delta - r + 1 = " << inv.mu_parameterized << "\n";
  out << "  complex link mu = delta - r + 1 = " << inv.complex_link_mu << "\n";
  out << "  cokernel delta = " << inv.cokernel_delta << "\n";
  out << "  ledger: mu_isolated = " << report.ledger.mu_isolated << ", mu_isolated + delta = "
      << report.ledger.recovered_mu << "\n";
  if (report.oracle) {
    out << "  implicit equation g = " << report.oracle->equation << "\n";
    out << "  oracle mu = " << report.oracle->local_algebra.dimension << " (stable at degree "
        << report.oracle->local_algebra.stable_degree << ")\n";
  }
  for (const auto& c : report.checks) {
    out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
  }
  out << "  consistent: " << (inv.consistent ? "yes" : "no") << "\n";
  out << "  precision used: " << inv.precision_used << "\n";
  std::ostringstream seconds;
  seconds.precision(3);
  seconds << std::fixed << report.wall_seconds;
  out << "  wall time: " << seconds.str() << " s\n";
  return out.str();
}

std::string render_json(const Report& report, bool include_timing) {
  const InvariantReport& inv = report.invariants;
  ordered_json out;
  out["name"] = inv.name;
  out["r"] = inv.r;
  ordered_json branches = ordered_json::array();
  for (const auto& b : inv.per_branch) {
    ordered_json e;
    e["label"] = b.label;
    e["multiplicity"] = b.multiplicity;
    e["delta"] = b.delta();
    e["conductor"] = b.semigroup.conductor;
    e["gaps"] = b.semigroup.gaps;
    e["semigroup_below_conductor"] = b.semigroup.achieved_orders;
    branches.push_back(std::move(e));
  }
  out["branches"] = std::move(branches);
  ordered_json matrix = ordered_json::array();
  for (const auto& row : inv.intersection_matrix) {
    ordered_json line = ordered_json::array();
    for (const auto& v : row) line.push_back(v ? ordered_json(*v) : ordered_json(nullptr));
    matrix.push_back(std::move(line));
  }
  out["intersection_matrix"] = std::move(matrix);
  out["delta"] = inv.delta_total;
  out["mu"] = inv.mu_parameterized;
  out["complex_link_mu"] = inv.complex_link_mu;
  out["cokernel_delta"] = inv.cokernel_delta;
  out["ledger"] = {{"mu_isolated", report.ledger.mu_isolated}, {"mu_isolated_plus_delta", report.ledger.recovered_mu}};
  if (report.oracle) {
    ordered_json trail = ordered_json::array();
    for (const auto& [degree, dim] : report.oracle->local_algebra.trail) trail.push_back({degree, dim});
    out["oracle"] = {{"g", report.oracle->equation},
                     {"mu", report.oracle->local_algebra.dimension},
                     {"stable_degree", report.oracle->local_algebra.stable_degree},
                     {"trail", trail}};
  } else {
    out["oracle"] = nullptr;
  }
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  out["checks"] = std::move(checks);
  out["consistent"] = inv.consistent;
  out["precision_used"] = inv.precision_used;
  if (include_timing) out["wall_seconds"] = report.wall_seconds;
  return out.dump(2) + "\n";
}

}  // namespace plcurve::cli
