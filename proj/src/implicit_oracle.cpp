#include "plcurve/implicit_oracle.hpp"

#include "plcurve/echelon.hpp"
#include "plcurve/errors.hpp"
#include "plcurve/resultant.hpp"

namespace plcurve {
namespace {

using UniPoly = std::vector<Rat>;  // index = power of t, no trailing zeros

void trim(UniPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Coordinate divided by its lowest power of t.
UniPoly unit_part(const TruncatedSeries::Terms& terms) {
  UniPoly p;
  if (terms.empty()) return p;
  std::size_t shift = terms.begin()->first;
  p.resize(terms.rbegin()->first - shift + 1);
  for (const auto& [e, c] : terms) p[e - shift] = c;
  return p;
}

UniPoly remainder(UniPoly a, const UniPoly& b) {
  while (a.size() >= b.size()) {
    Rat factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i].subtract_product(factor, b[i]);
    a.pop_back();
    trim(a);
  }
  return a;
}

std::size_t gcd_degree(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

UniPolyOverBivar coordinate_equation(const TruncatedSeries::Terms& terms, Var v) {
  std::vector<BivarPoly> coeffs(terms.empty() ? 1 : terms.rbegin()->first + 1);
  coeffs[0] = BivarPoly::variable(v);
  for (const auto& [e, c] : terms) coeffs[e] = coeffs[e] - BivarPoly::constant(c);
  return UniPolyOverBivar(std::move(coeffs));
}

std::size_t monomial_index(unsigned x, unsigned y) {
  std::size_t d = x + y;
  return d * (d + 1) / 2 + y;
}

// Inverse of monomial_index.
Monomial index_monomial(std::size_t index) {
  std::size_t d = 0;
  while ((d + 1) * (d + 2) / 2 <= index) ++d;
  std::size_t y = index - d * (d + 1) / 2;
  return {static_cast<unsigned>(d - y), static_cast<unsigned>(y)};
}

}  // namespace

bool returns_to_origin(const Branch& b) {
  if (!b.is_polynomial()) {
    throw AnalysisError(ErrorKind::unsupported, "branch '" + b.label() + "' is not polynomial");
  }
  UniPoly x = unit_part(b.x_terms());
  UniPoly y = unit_part(b.y_terms());
  if (x.empty() && y.empty()) return true;
  return gcd_degree(std::move(x), std::move(y)) > 0;
}

BivarPoly implicitize_branch(const Branch& b) {
  if (!b.is_polynomial()) {
    throw AnalysisError(ErrorKind::unsupported,
                        "branch '" + b.label() + "' is a truncated series; the implicit oracle "
                        "needs polynomial parameterizations");
  }
  if (b.x_terms().empty() && b.y_terms().empty()) {
    throw AnalysisError(ErrorKind::invalid_input, "branch '" + b.label() + "' is identically zero");
  }
  if (returns_to_origin(b)) {
    throw AnalysisError(ErrorKind::unsupported,
                        "branch '" + b.label() + "' passes through the origin at a second "
                        "parameter value; its global equation has extra local branches");
  }
  BivarPoly res = sylvester_resultant(coordinate_equation(b.x_terms(), Var::x),
                                      coordinate_equation(b.y_terms(), Var::y));
  return res.primitive_normalized();
}

ImplicitCurve implicitize_curve(const CurveGerm& germ) {
  ImplicitCurve curve;
  curve.g = BivarPoly::constant(Rat(1));
  for (const auto& b : germ.branches) {
    BivarPoly factor = implicitize_branch(b);
    for (const auto& prior : curve.provenance) {
      if (prior.factor == factor) {
        throw AnalysisError(ErrorKind::invalid_input, "branches '" + prior.label + "' and '" +
                                                          b.label() + "' are a repeated component");
      }
    }
    curve.g = curve.g * factor;
    curve.provenance.push_back({b.label(), std::move(factor)});
  }
  return curve;
}

std::size_t truncated_quotient_dimension(const std::vector<BivarPoly>& gens, std::size_t degree) {
  const std::size_t columns = (degree + 1) * (degree + 2) / 2;
  std::vector<SparseRow> seeds;
  for (const auto& g : gens) {
    SparseRow row;
    for (const auto& [m, c] : g.terms()) {
      if (m.total() > degree) break;
      row.emplace_back(monomial_index(m.x, m.y), c);
    }
    seeds.push_back(std::move(row));
  }
  auto shift = [degree](Var v) -> RowMap {
    return [degree, v](const SparseRow& row) {
      SparseRow out;
      out.reserve(row.size());
      for (const auto& [col, c] : row) {
        Monomial m = index_monomial(col);
        if (m.total() + 1 > degree) break;
        if (v == Var::x) {
          out.emplace_back(monomial_index(m.x + 1, m.y), c);
        } else {
          out.emplace_back(monomial_index(m.x, m.y + 1), c);
        }
      }
      return out;
    };
  };
  EchelonBasis basis = span_closure(seeds, {shift(Var::x), shift(Var::y)});
  return columns - basis.rank();
}

LocalAlgebraResult local_algebra_dimension(const std::vector<BivarPoly>& gens,
                                           const OraclePolicy& policy) {
  // dim(N) == dim(N + 1) gives m^(N+1) inside J + m^(N+2), hence inside J by
  // Nakayama, so every larger truncation has the same dimension.
  LocalAlgebraResult result;
  std::size_t degree = std::max<std::size_t>(policy.start, 1);
  result.trail.emplace_back(degree, truncated_quotient_dimension(gens, degree));
  while (degree + 1 <= policy.cap) {
    ++degree;
    std::size_t dim = truncated_quotient_dimension(gens, degree);
    std::size_t previous = result.trail.back().second;
    result.trail.emplace_back(degree, dim);
    if (dim == previous) {
      result.dimension = dim;
      result.stable_degree = degree - 1;
      return result;
    }
  }
  throw AnalysisError(ErrorKind::undetermined,
                      "local algebra dimension still growing at degree cap " +
                          std::to_string(policy.cap) + " (non-isolated or cap exceeded)");
}

LocalAlgebraResult milnor_implicit(const BivarPoly& g, const OraclePolicy& policy) {
  if (!g.coefficient({0, 0}).is_zero()) {
    throw AnalysisError(ErrorKind::invalid_input, "g(0,0) != 0: the curve misses the origin");
  }
  return local_algebra_dimension({poly_partial(g, Var::x), poly_partial(g, Var::y)}, policy);
}

}  // namespace plcurve
