#include "plcurve/branch_analysis.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "plcurve/echelon.hpp"
#include "plcurve/errors.hpp"
#include "plcurve/implicit_oracle.hpp"
#include "plcurve/resultant.hpp"

namespace plcurve {
namespace {

SparseRow to_row(const std::map<std::size_t, Rat>& acc) {
  SparseRow row;
  row.reserve(acc.size());
  for (const auto& [col, c] : acc) {
    if (!c.is_zero()) row.emplace_back(col, c);
  }
  return row;
}

// Multiplication by a series on the space of r interleaved truncated series,
// column = exponent * r + branch.
RowMap multiply_by(std::vector<TruncatedSeries> factors, std::size_t precision) {
  return [factors = std::move(factors), precision](const SparseRow& row) {
    const std::size_t r = factors.size();
    std::map<std::size_t, Rat> acc;
    for (const auto& [col, c] : row) {
      const std::size_t branch = col % r;
      const std::size_t e = col / r;
      for (const auto& [fe, fc] : factors[branch].terms()) {
        if (e + fe >= precision) break;
        acc[(e + fe) * r + branch] += c * fc;
      }
    }
    return to_row(acc);
  };
}

std::size_t working_limit(const CurveGerm& germ, const PrecisionPolicy& policy) {
  std::size_t limit = policy.cap;
  for (const auto& b : germ.branches) limit = std::min(limit, b.known_precision());
  return limit;
}

std::size_t polynomial_degree(const TruncatedSeries::Terms& terms) {
  return terms.empty() ? 0 : terms.rbegin()->first;
}

// ord_t g(x(t), y(t)) for a polynomial branch, exactly; nullopt when it vanishes.
std::optional<std::size_t> substitution_order(const BivarPoly& g, const Branch& b) {
  std::size_t bound = g.degree(Var::x) * polynomial_degree(b.x_terms()) +
                      g.degree(Var::y) * polynomial_degree(b.y_terms()) + 1;
  TruncatedSeries s = poly_eval_series(g, b.x_series(bound), b.y_series(bound));
  if (s.is_zero()) return std::nullopt;
  return s.order().value;
}

// ord_t Res_s(x_j(s) - x_i(t), y_j(s) - y_i(t)); nullopt when it vanishes.
std::optional<std::size_t> resultant_order(const Branch& i, const Branch& j) {
  auto equation = [](const TruncatedSeries::Terms& in_s, const TruncatedSeries::Terms& in_t) {
    std::vector<BivarPoly> coeffs(polynomial_degree(in_s) + 1);
    for (const auto& [e, c] : in_t) coeffs[0].add_term({static_cast<unsigned>(e), 0}, -c);
    for (const auto& [e, c] : in_s) coeffs[e] = coeffs[e] + BivarPoly::constant(c);
    return coeffs;
  };
  auto p = equation(j.x_terms(), i.x_terms());
  auto q = equation(j.y_terms(), i.y_terms());
  auto all_zero = [](const std::vector<BivarPoly>& v) {
    return std::all_of(v.begin(), v.end(), [](const BivarPoly& c) { return c.is_zero(); });
  };
  // 0 = 0 in one coordinate: both branches lie on the same axis.
  if (all_zero(p) || all_zero(q)) return std::nullopt;
  BivarPoly res = sylvester_resultant(UniPolyOverBivar(std::move(p)), UniPolyOverBivar(std::move(q)));
  if (res.is_zero()) return std::nullopt;
  return res.order();
}

// Both routes on polynomial branches, implicitizing whichever branch does
// not return to the origin.
IntersectionResult exact_intersection(const Branch& a, const Branch& b) {
  const Branch* i = &a;
  const Branch* j = &b;
  if (returns_to_origin(*j)) {
    std::swap(i, j);
    if (returns_to_origin(*j)) {
      throw AnalysisError(ErrorKind::unsupported,
                          "branches '" + a.label() + "' and '" + b.label() +
                              "' both pass through the origin at a second parameter value");
    }
  }
  auto by_substitution = substitution_order(implicitize_branch(*j), *i);
  auto by_resultant = resultant_order(*i, *j);
  if (by_substitution != by_resultant) {
    auto show = [](const std::optional<std::size_t>& v) {
      return v ? std::to_string(*v) : std::string("infinite");
    };
    throw AnalysisError(ErrorKind::inconsistent,
                        "intersection routes disagree for '" + a.label() + "' and '" + b.label() +
                            "': substitution " + show(by_substitution) + ", resultant " +
                            show(by_resultant));
  }
  if (!by_substitution) {
    throw AnalysisError(ErrorKind::invalid_input, "infinite intersection between '" + a.label() +
                                                      "' and '" + b.label() +
                                                      "': repeated component");
  }
  return {*by_substitution, *by_substitution, *by_resultant, 0};
}

}  // namespace

std::string ValidationVerdict::summary() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < violations.size(); ++k) {
    if (k) out << "; ";
    out << violations[k].message;
  }
  return out.str();
}

ValidationVerdict validate_germ(const CurveGerm& germ, const PrecisionPolicy& policy) {
  ValidationVerdict verdict;
  if (germ.branches.empty()) {
    verdict.violations.push_back({ViolationKind::empty_germ, {}, "germ has no branches"});
    return verdict;
  }
  std::vector<bool> usable(germ.r(), true);
  for (std::size_t k = 0; k < germ.r(); ++k) {
    const Branch& b = germ.branches[k];
    const std::string where = "branch " + std::to_string(k + 1) + " ('" + b.label() + "'): ";
    if (b.x_terms().empty() && b.y_terms().empty()) {
      verdict.violations.push_back({ViolationKind::zero_branch, {k}, where + "both components are zero"});
      usable[k] = false;
      continue;
    }
    if (b.x_terms().count(0) || b.y_terms().count(0)) {
      verdict.violations.push_back({ViolationKind::not_at_origin, {k}, where + "not a germ at origin"});
      usable[k] = false;
      continue;
    }
    if (std::size_t g = b.exponent_gcd(); g != 1) {
      verdict.violations.push_back({ViolationKind::not_one_to_one, {k},
                                    where + "not generically one-to-one (gcd of exponents is " +
                                        std::to_string(g) + ")"});
      usable[k] = false;
    }
  }
  for (std::size_t i = 0; i < germ.r(); ++i) {
    for (std::size_t j = i + 1; j < germ.r(); ++j) {
      if (!usable[i] || !usable[j]) continue;
      const std::string where = "branches " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " ('" +
                                germ.branches[i].label() + "', '" + germ.branches[j].label() + "'): ";
      if (same_parameterization(germ.branches[i], germ.branches[j])) {
        verdict.violations.push_back({ViolationKind::repeated_component, {i, j}, where + "repeated component"});
        continue;
      }
      try {
        intersection_multiplicity(germ.branches[i], germ.branches[j], policy);
      } catch (const AnalysisError& e) {
        if (e.kind() == ErrorKind::invalid_input) {
          verdict.violations.push_back({ViolationKind::repeated_component, {i, j}, where + "repeated component"});
        } else if (e.kind() == ErrorKind::inconsistent) {
          throw;
        } else {
          verdict.violations.push_back({ViolationKind::undetermined, {i, j},
                                        where + "distinctness undetermined: " + e.what()});
        }
      }
    }
  }
  return verdict;
}

std::size_t branch_multiplicity(const Branch& b) {
  std::size_t p = b.is_polynomial() ? b.degree() + 1 : b.known_precision();
  SeriesOrder ox = b.x_series(p).order();
  SeriesOrder oy = b.y_series(p).order();
  if (b.is_polynomial()) {
    if (!ox.exact && !oy.exact) {
      throw AnalysisError(ErrorKind::invalid_input, "branch '" + b.label() + "' is identically zero");
    }
    if (!ox.exact) return oy.value;
    if (!oy.exact) return ox.value;
    return std::min(ox.value, oy.value);
  }
  std::size_t m = std::min(ox.value, oy.value);
  bool determined = (ox.exact && ox.value == m) || (oy.exact && oy.value == m);
  if (!determined) {
    throw AnalysisError(ErrorKind::undetermined,
                        "multiplicity of branch '" + b.label() + "' needs more than " +
                            std::to_string(p) + " known coefficients");
  }
  return m;
}

std::vector<std::size_t> semigroup_gaps_below(const Branch& b, std::size_t precision) {
  std::vector<TruncatedSeries> x{b.x_series(precision)};
  std::vector<TruncatedSeries> y{b.y_series(precision)};
  std::vector<SparseRow> seeds;
  if (precision > 0) seeds.push_back(SparseRow{{0, Rat(1)}});
  EchelonBasis basis = span_closure(seeds, {multiply_by(x, precision), multiply_by(y, precision)});
  std::vector<std::size_t> gaps;
  const auto& rows = basis.rows();
  for (std::size_t v = 0; v < precision; ++v) {
    if (!rows.count(v)) gaps.push_back(v);
  }
  return gaps;
}

SemigroupData value_semigroup(const Branch& b, const PrecisionPolicy& policy) {
  if (b.exponent_gcd() != 1) {
    throw AnalysisError(ErrorKind::invalid_input,
                        "branch '" + b.label() + "' is not generically one-to-one");
  }
  const std::size_t limit = std::min(policy.cap, b.known_precision());
  std::size_t precision = std::max<std::size_t>(policy.start, 1);
  if (precision > limit) {
    throw AnalysisError(ErrorKind::undetermined, "value semigroup of '" + b.label() +
                                                     "': starting precision exceeds the cap");
  }
  std::vector<std::size_t> previous = semigroup_gaps_below(b, precision);
  while (2 * precision <= limit) {
    precision *= 2;
    std::vector<std::size_t> gaps = semigroup_gaps_below(b, precision);
    if (gaps == previous) {
      SemigroupData data;
      data.gaps = std::move(gaps);
      data.conductor = data.gaps.empty() ? 0 : data.gaps.back() + 1;
      for (std::size_t v = 0, g = 0; v < data.conductor; ++v) {
        if (g < data.gaps.size() && data.gaps[g] == v) {
          ++g;
        } else {
          data.achieved_orders.push_back(v);
        }
      }
      if (data.achieved_orders.empty()) data.achieved_orders.push_back(0);
      data.precision_used = precision;
      return data;
    }
    previous = std::move(gaps);
  }
  throw AnalysisError(ErrorKind::undetermined, "value semigroup of '" + b.label() +
                                                   "' did not stabilize below precision " +
                                                   std::to_string(limit));
}

std::size_t delta_branch(const Branch& b, const PrecisionPolicy& policy) {
  return value_semigroup(b, policy).delta();
}

IntersectionResult intersection_multiplicity(const Branch& a, const Branch& b,
                                             const PrecisionPolicy& policy) {
  if (a.is_polynomial() && b.is_polynomial()) return exact_intersection(a, b);

  // Series input: run both routes on polynomial truncations of rising degree.
  const std::size_t limit = std::min({policy.cap, a.known_precision(), b.known_precision()});
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::size_t previous = kNone;
  bool coincident_so_far = true;
  for (std::size_t precision = std::max<std::size_t>(policy.start, 1); precision <= limit;
       precision *= 2) {
    Branch ta = a.truncated_polynomial(precision);
    Branch tb = b.truncated_polynomial(precision);
    IntersectionResult current;
    try {
      current = exact_intersection(ta, tb);
    } catch (const AnalysisError& e) {
      if (e.kind() == ErrorKind::inconsistent) throw;
      previous = kNone;
      continue;
    }
    coincident_so_far = false;
    if (previous != kNone && previous == current.value) {
      current.precision_used = precision;
      return current;
    }
    previous = current.value;
  }
  if (coincident_so_far) {
    throw AnalysisError(ErrorKind::invalid_input, "branches '" + a.label() + "' and '" + b.label() +
                                                      "' agree to cap precision: repeated component");
  }
  throw AnalysisError(ErrorKind::undetermined, "intersection of '" + a.label() + "' and '" +
                                                   b.label() + "' did not stabilize below precision " +
                                                   std::to_string(limit));
}

std::size_t delta_total(const CurveGerm& germ, const PrecisionPolicy& policy) {
  std::size_t total = 0;
  for (const auto& b : germ.branches) total += delta_branch(b, policy);
  for (std::size_t i = 0; i < germ.r(); ++i) {
    for (std::size_t j = i + 1; j < germ.r(); ++j) {
      total += intersection_multiplicity(germ.branches[i], germ.branches[j], policy).value;
    }
  }
  return total;
}

std::size_t cokernel_dimension_at(const CurveGerm& germ, std::size_t precision) {
  const std::size_t r = germ.r();
  std::vector<TruncatedSeries> xs;
  std::vector<TruncatedSeries> ys;
  for (const auto& b : germ.branches) {
    xs.push_back(b.x_series(precision));
    ys.push_back(b.y_series(precision));
  }
  std::vector<SparseRow> seeds;
  if (precision > 0) {
    SparseRow one;
    for (std::size_t i = 0; i < r; ++i) one.emplace_back(i, Rat(1));
    seeds.push_back(std::move(one));
  }
  EchelonBasis basis =
      span_closure(seeds, {multiply_by(std::move(xs), precision), multiply_by(std::move(ys), precision)});
  return r * precision - basis.rank();
}

CokernelResult cokernel_dimension(const CurveGerm& germ, const PrecisionPolicy& policy) {
  const std::size_t limit = working_limit(germ, policy);
  std::size_t precision = std::max<std::size_t>(policy.start, 1);
  if (precision > limit) {
    throw AnalysisError(ErrorKind::undetermined, "cokernel dimension: starting precision exceeds the cap");
  }
  std::size_t previous = cokernel_dimension_at(germ, precision);
  while (2 * precision <= limit) {
    precision *= 2;
    std::size_t current = cokernel_dimension_at(germ, precision);
    if (current == previous) return {current, precision};
    previous = current;
  }
  throw AnalysisError(ErrorKind::undetermined,
                      "cokernel dimension did not stabilize below precision " + std::to_string(limit));
}

MilnorFromDelta milnor_from_delta(const CurveGerm& germ, const PrecisionPolicy& policy) {
  MilnorFromDelta out;
  out.delta = delta_total(germ, policy);
  out.r = germ.r();
  const auto delta = static_cast<std::int64_t>(out.delta);
  const auto r = static_cast<std::int64_t>(out.r);
  out.mu = 2 * delta - r + 1;
  out.complex_link_mu = delta - r + 1;
  return out;
}

InvariantReport analyze_germ(const CurveGerm& germ, const PrecisionPolicy& policy) {
  ValidationVerdict verdict = validate_germ(germ, policy);
  if (!verdict.valid()) throw AnalysisError(ErrorKind::invalid_input, verdict.summary());

  InvariantReport report;
  report.name = germ.name;
  report.r = germ.r();
  std::size_t total = 0;
  for (const auto& b : germ.branches) {
    BranchInvariants inv;
    inv.label = b.label();
    inv.multiplicity = branch_multiplicity(b);
    inv.semigroup = value_semigroup(b, policy);
    total += inv.delta();
    report.precision_used = std::max(report.precision_used, inv.semigroup.precision_used);
    report.per_branch.push_back(std::move(inv));
  }
  report.intersection_matrix.assign(report.r, std::vector<std::optional<std::size_t>>(report.r));
  for (std::size_t i = 0; i < report.r; ++i) {
    for (std::size_t j = i + 1; j < report.r; ++j) {
      IntersectionResult meet = intersection_multiplicity(germ.branches[i], germ.branches[j], policy);
      report.intersection_matrix[i][j] = meet.value;
      report.intersection_matrix[j][i] = meet.value;
      report.precision_used = std::max(report.precision_used, meet.precision_used);
      total += meet.value;
    }
  }
  report.delta_total = total;
  const auto delta = static_cast<std::int64_t>(total);
  const auto r = static_cast<std::int64_t>(report.r);
  report.mu_parameterized = 2 * delta - r + 1;
  report.complex_link_mu = delta - r + 1;
  if (report.mu_parameterized < 0) {
    throw AnalysisError(ErrorKind::inconsistent,
                        "2*delta - r + 1 is negative (" + std::to_string(report.mu_parameterized) + ")");
  }

  CokernelResult cokernel = cokernel_dimension(germ, policy);
  report.cokernel_delta = cokernel.dimension;
  report.precision_used = std::max(report.precision_used, cokernel.precision_used);
  report.consistent = report.cokernel_delta == report.delta_total;
  return report;
}

}  // namespace plcurve
