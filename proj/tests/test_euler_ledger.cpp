#include <doctest.h>

#include <array>

#include "plcurve/errors.hpp"
#include "plcurve/euler_ledger.hpp"

using namespace plcurve;

namespace {

StratumTable table(std::int64_t n, std::int64_t r, std::map<std::int64_t, std::int64_t> chi,
                   std::vector<std::int64_t> upstairs, bool isolated) {
  StratumTable t;
  t.n = n;
  t.r = r;
  t.chi_xk = std::move(chi);
  t.upstairs = std::move(upstairs);
  t.isolated = isolated;
  if (isolated) t.s = 0;
  return t;
}

}  // namespace

TEST_CASE("euler_star") {
  CHECK(euler_star(table(2, 1, {}, {0}, false)) == 0);
  CHECK(euler_star(table(2, 1, {{2, 1}}, {0}, true)) == -1);
  CHECK(euler_star(table(2, 3, {{2, 3}}, {0, 0, 0}, false)) == -1);
  // Upstairs Milnor numbers enter as (-1)^(n-1) mu.
  CHECK(euler_star(table(2, 1, {}, {5}, true)) == -5);
  CHECK(euler_star(table(3, 1, {}, {5}, true)) == 5);
}

TEST_CASE("mu_isolated") {
  CHECK(mu_isolated(table(2, 1, {{2, 1}}, {0}, true)) == 1);
  CHECK(mu_isolated(table(2, 1, {}, {7}, true)) == 7);
  CHECK(mu_isolated(table(2, 2, {{2, 2}}, {0, 0}, true)) == 1);
  try {
    mu_isolated(table(2, 3, {{2, 1}}, {0, 0, 0}, true));
    FAIL("expected an exception");
  } catch (const AnalysisError& e) {
    CHECK(e.kind() == ErrorKind::inconsistent);
    CHECK(std::string(e.what()).find("inconsistent table") != std::string::npos);
  }
  CHECK_THROWS_AS(mu_isolated(table(2, 1, {}, {0}, false)), AnalysisError);
}

TEST_CASE("euler_star and mu_isolated agree on isolated tables") {
  for (std::int64_t n = 1; n <= 4; ++n) {
    for (std::int64_t r = 1; r <= 4; ++r) {
      for (std::int64_t chi2 = 0; chi2 <= 6; ++chi2) {
        StratumTable t = table(n, r, {{2, chi2}, {3, 1}}, std::vector<std::int64_t>(r, 2), true);
        std::int64_t sign = (n - 1) % 2 == 0 ? 1 : -1;
        std::int64_t mu = 0;
        try {
          mu = mu_isolated(t);
        } catch (const AnalysisError&) {
          continue;
        }
        CHECK(euler_star(t) == sign * mu);
      }
    }
  }
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(validate_table(table(0, 1, {}, {0}, false)), AnalysisError);
  CHECK_THROWS_AS(validate_table(table(2, 1, {{1, 3}}, {0}, false)), AnalysisError);
  CHECK_THROWS_AS(validate_table(table(2, 2, {}, {0}, false)), AnalysisError);
  StratumTable bad_s = table(2, 1, {}, {0}, true);
  bad_s.s = 1;
  CHECK_THROWS_AS(validate_table(bad_s), AnalysisError);
  CHECK_THROWS_AS(validate_table(table(2, 1, {}, {-1}, true)), AnalysisError);
}

TEST_CASE("unfolding_mu_plane_curve") {
  CHECK(unfolding_mu_plane_curve(1, 1) == 2);
  CHECK(unfolding_mu_plane_curve(2, 1) == 1);
  CHECK(unfolding_mu_plane_curve(4, 6) == 9);
  CHECK_THROWS_AS(unfolding_mu_plane_curve(3, 0), AnalysisError);
}

TEST_CASE("reduced_hyper_euler") {
  CHECK(reduced_hyper_euler(1, 5) == 5);
  CHECK(reduced_hyper_euler(3, 0) == -2);
  CHECK(reduced_hyper_euler(2, 1) == 0);
  for (std::int64_t c = -20; c <= 20; ++c) CHECK(reduced_hyper_euler(1, c) == c);
}

TEST_CASE("nodes-only tables decompose the Milnor number") {
  for (std::int64_t r = 1; r <= 6; ++r) {
    for (std::int64_t delta = r - 1; delta <= 20; ++delta) {
      StratumTable t = nodes_only_table(r, delta);
      CHECK(mu_isolated(t) + delta == unfolding_mu_plane_curve(r, delta));
    }
  }
}

TEST_CASE("rank profiles") {
  CHECK(stalk_profile_I(MultiplicityPoint(1), 2) == RankProfile{{-2, 1}});
  CHECK(stalk_profile_I(MultiplicityPoint(3), 2) == RankProfile{{-2, 3}});
  CHECK(stalk_profile_I(MultiplicityPoint(2), 1) == RankProfile{{-1, 2}});
  CHECK(costalk_profile_I(MultiplicityPoint(1), 2) == RankProfile{{2, 1}});
  CHECK(costalk_profile_I(MultiplicityPoint(3), 2) == RankProfile{{2, 3}});
  CHECK(costalk_profile_I(MultiplicityPoint(2), 3) == RankProfile{{3, 2}});
  CHECK(stalk_profile_N(MultiplicityPoint(1), 5).empty());
  CHECK(stalk_profile_N(MultiplicityPoint(4), 2) == RankProfile{{-1, 3}});
  CHECK(stalk_profile_N(MultiplicityPoint(2), 3) == RankProfile{{-2, 1}});
  CHECK(stalk_profile_constant(3) == RankProfile{{-3, 1}});
  CHECK_THROWS_AS(MultiplicityPoint(0), AnalysisError);
  CHECK(RankProfile{{1, 2}, {2, 0}}.ranks().size() == 1);
  CHECK(RankProfile{{1, 2}, {-4, 3}}.euler() == 1);
}

TEST_CASE("degree_range_check") {
  CHECK(degree_range_check(2, 0, RankProfile{{1, 2}}));
  CHECK_FALSE(degree_range_check(2, 0, RankProfile{{0, 1}}));
  CHECK(degree_range_check(3, 1, RankProfile{{1, 1}, {2, 4}}));
  CHECK(degree_range_check(3, 1, RankProfile{}));
  CHECK_FALSE(degree_range_check(3, 1, RankProfile{{3, 1}}));
}

TEST_CASE("stratum_sum_chi") {
  std::array<StratumContribution, 1> one{{{1, 4}}};
  CHECK(stratum_sum_chi(one) == 4);
  std::array<StratumContribution, 2> cancel{{{1, 1}, {-1, 1}}};
  CHECK(stratum_sum_chi(cancel) == 0);
  std::vector<StratumContribution> nodes(7, StratumContribution{1, 1});
  CHECK(stratum_sum_chi(nodes) == 7);
}
