#include <doctest.h>

#include "plcurve/cli/random_germs.hpp"
#include "plcurve/errors.hpp"
#include "plcurve/implicit_oracle.hpp"
#include "support.hpp"

using namespace plcurve;
using namespace plcurve::testing;

TEST_CASE("implicitize_branch") {
  CHECK(implicitize_branch(branch("a", {{1, 2}}, {{1, 3}})) == poly({{1, 0, 2}, {-1, 3, 0}}));
  CHECK(implicitize_branch(branch("a", {{1, 1}}, {{1, 2}})) == poly({{1, 0, 1}, {-1, 2, 0}}));
  CHECK(implicitize_branch(branch("a", {{1, 3}}, {{1, 4}})) == poly({{1, 0, 3}, {-1, 4, 0}}));
  CHECK(implicitize_branch(branch("a", {{2, 1}}, {})) == poly({{1, 0, 1}}));
}

TEST_CASE("implicitize_curve multiplies the branch equations") {
  auto node = implicitize_curve(germ("node", {branch("a", {{1, 1}}, {}), branch("b", {}, {{1, 1}})}));
  CHECK(node.g == poly({{1, 1, 1}}));
  CHECK(node.provenance.size() == 2);
  auto tacnode = implicitize_curve(germ("tacnode", {branch("a", {{1, 1}}, {{1, 2}}), branch("b", {{1, 1}}, {{-1, 2}})}));
  CHECK(tacnode.g == poly({{1, 0, 2}, {-1, 4, 0}}));
  CHECK(implicitize_curve(germ("cusp", {branch("a", {{1, 2}}, {{1, 3}})})).g == poly({{1, 0, 2}, {-1, 3, 0}}));
  CHECK_THROWS_AS(implicitize_curve(germ("twice", {branch("a", {{1, 1}}, {}), branch("b", {{-1, 1}}, {})})),
                  AnalysisError);
}

TEST_CASE("the oracle refuses what it cannot do exactly") {
  auto s = Branch::series("a", series({{1, 2}}, 20), series({{1, 3}}, 20));
  try {
    implicitize_branch(s);
    FAIL("expected an exception");
  } catch (const AnalysisError& e) {
    CHECK(e.kind() == ErrorKind::unsupported);
  }
  // (t^2 - t^3, t^3 - t^4) passes through the origin again at t = 1.
  auto loop = branch("a", {{1, 2}, {-1, 3}}, {{1, 3}, {-1, 4}});
  CHECK(returns_to_origin(loop));
  CHECK_THROWS_AS(implicitize_branch(loop), AnalysisError);
  CHECK_FALSE(returns_to_origin(branch("a", {{1, 2}}, {{1, 3}, {1, 4}})));
}

TEST_CASE("implicit equations vanish on their branches and obey the degree bounds") {
  cli::RandomGermSpec spec;
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    CurveGerm g = cli::random_germ(seed, spec);
    for (const auto& b : g.branches) {
      CAPTURE(seed);
      BivarPoly f = implicitize_branch(b);
      auto value = poly_eval_series(f, b.x_series(64), b.y_series(64));
      CHECK(value.is_zero());
      std::size_t ord_x = b.x_terms().empty() ? 0 : b.x_terms().begin()->first;
      std::size_t ord_y = b.y_terms().empty() ? 0 : b.y_terms().begin()->first;
      if (ord_x > 0 && ord_y > 0) {
        CHECK(f.degree(Var::x) <= b.y_terms().rbegin()->first);
        CHECK(f.degree(Var::y) <= b.x_terms().rbegin()->first);
      }
      CHECK(f.coefficient({0, 0}).is_zero());
    }
  }
}

TEST_CASE("local_algebra_dimension") {
  CHECK(local_algebra_dimension({poly({{1, 1, 0}}), poly({{1, 0, 1}})}).dimension == 1);
  CHECK(local_algebra_dimension({poly({{3, 2, 0}}), poly({{2, 0, 1}})}).dimension == 2);
  CHECK(local_algebra_dimension({poly({{3, 0, 2}}), poly({{5, 4, 0}})}).dimension == 8);
  // A unit generates the whole local ring.
  CHECK(local_algebra_dimension({poly({{1, 0, 0}, {1, 1, 0}})}).dimension == 0);
  // (y, x^5 + x^6): the unit 1 + x does not change the colength.
  CHECK(local_algebra_dimension({poly({{1, 0, 1}}), poly({{1, 5, 0}, {1, 6, 0}})}).dimension == 5);
}

TEST_CASE("local_algebra_dimension reports non-isolated ideals") {
  OraclePolicy small{4, 24};
  try {
    local_algebra_dimension({poly({{1, 0, 2}})}, small);
    FAIL("expected an exception");
  } catch (const AnalysisError& e) {
    CHECK(e.kind() == ErrorKind::undetermined);
    CHECK(std::string(e.what()).find("non-isolated or cap exceeded") != std::string::npos);
  }
}

TEST_CASE("truncated values stay put once stable") {
  std::vector<BivarPoly> e6{poly({{-4, 3, 0}}), poly({{3, 0, 2}})};
  auto stable = local_algebra_dimension(e6);
  CHECK(stable.dimension == 6);
  for (std::size_t extra = 1; extra <= 8; ++extra) {
    CHECK(truncated_quotient_dimension(e6, stable.stable_degree + extra) == 6);
  }
  CHECK(truncated_quotient_dimension(e6, 2 * stable.stable_degree) == 6);
}

TEST_CASE("milnor_implicit") {
  CHECK(milnor_implicit(poly({{1, 0, 2}, {-1, 3, 0}})).dimension == 2);
  CHECK(milnor_implicit(poly({{1, 1, 1}})).dimension == 1);
  CHECK(milnor_implicit(poly({{1, 0, 3}, {-1, 4, 0}})).dimension == 6);
  CHECK(milnor_implicit(poly({{1, 0, 1}, {-1, 2, 0}})).dimension == 0);
  CHECK_THROWS_AS(milnor_implicit(poly({{1, 0, 0}, {1, 0, 1}})), AnalysisError);
}
