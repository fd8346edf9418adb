#include <doctest.h>

#include "plcurve/bivar_poly.hpp"
#include "plcurve/cli/random_germs.hpp"
#include "plcurve/errors.hpp"
#include "plcurve/resultant.hpp"
#include "support.hpp"

using namespace plcurve;
using namespace plcurve::testing;

namespace {

// s-polynomial c - sum_k terms[k] s^k for the coordinate variable v.
UniPolyOverBivar coordinate(Var v, Coeffs c) {
  std::size_t degree = 0;
  for (auto [coef, e] : c) degree = std::max(degree, e);
  std::vector<BivarPoly> coeffs(degree + 1);
  coeffs[0] = BivarPoly::variable(v);
  for (auto [coef, e] : c) coeffs[e] = coeffs[e] - BivarPoly::constant(Rat(coef));
  return UniPolyOverBivar(coeffs);
}

BivarPoly random_poly(cli::SplitMix64& rng) {
  BivarPoly p;
  for (int k = 0; k < 4; ++k) {
    p.add_term({static_cast<unsigned>(rng.uniform(0, 3)), static_cast<unsigned>(rng.uniform(0, 3))},
               Rat(rng.uniform(-4, 4)));
  }
  return p;
}

}  // namespace

TEST_CASE("bivariate polynomials print in local degree order") {
  auto cusp = poly({{1, 0, 2}, {-1, 3, 0}});
  CHECK(cusp.str() == "y^2 - x^3");
  CHECK(poly({{1, 1, 1}}).str() == "x*y");
  CHECK(poly({{-3, 2, 0}}).str() == "-3*x^2");
  CHECK(cusp.order() == 2);
  CHECK(cusp.total_degree() == 3);
  CHECK(cusp.degree(Var::x) == 3);
  CHECK(cusp.degree(Var::y) == 2);
}

TEST_CASE("poly_partial") {
  auto cusp = poly({{1, 0, 2}, {-1, 3, 0}});
  CHECK(poly_partial(cusp, Var::x) == poly({{-3, 2, 0}}));
  CHECK(poly_partial(cusp, Var::y) == poly({{2, 0, 1}}));
  CHECK(poly_partial(poly({{1, 1, 1}}), Var::x) == poly({{1, 0, 1}}));
}

TEST_CASE("primitive normalization makes the local leading term positive") {
  auto p = poly({{-6, 3, 0}, {4, 0, 2}}).scaled(Rat(1, 7));
  CHECK(p.primitive_normalized() == poly({{2, 0, 2}, {-3, 3, 0}}));
  CHECK(poly({{-1, 0, 1}, {1, 2, 0}}).primitive_normalized() == poly({{1, 0, 1}, {-1, 2, 0}}));
}

TEST_CASE("exact division") {
  auto a = poly({{1, 0, 1}, {-1, 2, 0}});
  auto b = poly({{1, 0, 1}, {1, 2, 0}});
  CHECK(divide_exact(a * b, b) == a);
  CHECK_THROWS_AS(divide_exact(a, b), AnalysisError);
}

TEST_CASE("poly_eval_series") {
  auto cusp = poly({{1, 0, 2}, {-1, 3, 0}});
  auto zero = poly_eval_series(cusp, series({{1, 2}}, 20), series({{1, 3}}, 20));
  CHECK(zero.is_zero());
  CHECK(zero.precision() >= 20);
  CHECK(poly_eval_series(poly({{1, 0, 1}}), series({{1, 2}}, 20), series({{1, 3}}, 20)).terms() ==
        series({{1, 3}}, 20).terms());
  auto perturbed = poly_eval_series(cusp, series({{1, 2}}, 20), series({{1, 3}, {1, 4}}, 20));
  CHECK(perturbed.terms() == series({{2, 7}, {1, 8}}, 20).terms());
}

TEST_CASE("Sylvester resultants eliminate the parameter") {
  CHECK(sylvester_resultant(coordinate(Var::x, {{1, 1}}), coordinate(Var::y, {{1, 1}})).primitive_normalized() ==
        poly({{1, 0, 1}, {-1, 1, 0}}).primitive_normalized());
  CHECK(sylvester_resultant(coordinate(Var::x, {{1, 2}}), coordinate(Var::y, {{1, 3}})).primitive_normalized() ==
        poly({{1, 0, 2}, {-1, 3, 0}}));
  CHECK(sylvester_resultant(coordinate(Var::x, {{1, 2}}), coordinate(Var::y, {{1, 5}})).primitive_normalized() ==
        poly({{1, 0, 2}, {-1, 5, 0}}));
}

TEST_CASE("resultant of two constants is refused") {
  UniPolyOverBivar a({BivarPoly::constant(Rat(2))});
  UniPolyOverBivar b({BivarPoly::constant(Rat(3))});
  CHECK_THROWS_AS(sylvester_resultant(a, b), AnalysisError);
  CHECK_THROWS_AS(UniPolyOverBivar({BivarPoly()}), AnalysisError);
  UniPolyOverBivar linear({BivarPoly::variable(Var::x), BivarPoly::constant(Rat(1))});
  CHECK(sylvester_resultant(a, linear) == BivarPoly::constant(Rat(2)));
}

TEST_CASE("swapping resultant arguments costs the sign (-1)^(m n)") {
  cli::SplitMix64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<BivarPoly> pc;
    std::vector<BivarPoly> qc;
    auto m = rng.uniform(1, 3);
    auto n = rng.uniform(1, 3);
    for (std::int64_t k = 0; k <= m; ++k) pc.push_back(random_poly(rng));
    for (std::int64_t k = 0; k <= n; ++k) qc.push_back(random_poly(rng));
    if (pc.back().is_zero()) pc.back() = BivarPoly::constant(Rat(1));
    if (qc.back().is_zero()) qc.back() = BivarPoly::constant(Rat(1));
    UniPolyOverBivar p(pc);
    UniPolyOverBivar q(qc);
    auto pq = sylvester_resultant(p, q);
    auto qp = sylvester_resultant(q, p);
    CHECK(((p.degree() * q.degree()) % 2 == 0 ? pq : -pq) == qp);
  }
}

TEST_CASE("Bareiss determinant matches cofactor expansion") {
  auto x = BivarPoly::variable(Var::x);
  auto y = BivarPoly::variable(Var::y);
  auto one = BivarPoly::constant(Rat(1));
  BivarPoly zero;
  std::vector<std::vector<BivarPoly>> m{{zero, x, one}, {y, one, x}, {one, y, zero}};
  // 0*(0 - x*y) - x*(0 - x) + 1*(y*y - 1)
  CHECK(bareiss_determinant(m) == x * x + y * y - one);
}

TEST_CASE("polynomial ring axioms") {
  cli::SplitMix64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_poly(rng);
    auto b = random_poly(rng);
    auto c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == BivarPoly());
  }
}
