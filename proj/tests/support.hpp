#ifndef PLCURVE_TESTS_SUPPORT_HPP
#define PLCURVE_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "plcurve/bivar_poly.hpp"
#include "plcurve/branch.hpp"
#include "plcurve/series.hpp"

namespace plcurve::testing {

using Coeffs = std::initializer_list<std::pair<long, std::size_t>>;

inline std::vector<Term> terms(Coeffs c) {
  std::vector<Term> out;
  for (auto [coef, e] : c) out.push_back({Rat(coef), e});
  return out;
}

inline Branch branch(const std::string& label, Coeffs x, Coeffs y) {
  return Branch::polynomial(label, terms(x), terms(y));
}

inline TruncatedSeries series(Coeffs c, std::size_t precision) {
  std::vector<std::pair<std::size_t, Rat>> pairs;
  for (auto [coef, e] : c) pairs.emplace_back(e, Rat(coef));
  return TruncatedSeries(pairs, precision);
}

/// {coefficient, x exponent, y exponent} triples.
inline BivarPoly poly(std::initializer_list<std::tuple<long, unsigned, unsigned>> c) {
  BivarPoly p;
  for (auto [coef, a, b] : c) p.add_term({a, b}, Rat(coef));
  return p;
}

inline CurveGerm germ(std::string name, std::vector<Branch> branches) {
  return CurveGerm{std::move(name), std::move(branches)};
}

}  // namespace plcurve::testing

#endif  // PLCURVE_TESTS_SUPPORT_HPP
