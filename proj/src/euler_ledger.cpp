#include "plcurve/euler_ledger.hpp"

#include <string>

#include "plcurve/errors.hpp"

namespace plcurve {
namespace {

std::int64_t sign_power(std::int64_t k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

void validate_table(const StratumTable& t) {
  auto fail = [](const std::string& what) { throw AnalysisError(ErrorKind::invalid_input, what); };
  if (t.n < 1) fail("n must be at least 1");
  if (t.r < 1) fail("r must be at least 1");
  for (const auto& [k, chi] : t.chi_xk) {
    if (k < 2) fail("chi_Xk key " + std::to_string(k) + " is below 2");
  }
  if (static_cast<std::int64_t>(t.upstairs.size()) != t.r) {
    fail("upstairs has " + std::to_string(t.upstairs.size()) + " entries but r = " + std::to_string(t.r));
  }
  if (t.s && *t.s < 0) fail("s must be nonnegative");
  if (t.isolated) {
    if (t.s && *t.s != 0) fail("isolated_flag requires s = 0");
    for (auto mu : t.upstairs) {
      if (mu < 0) fail("isolated_flag requires upstairs Milnor numbers >= 0");
    }
  }
}

std::int64_t multiple_point_euler(const StratumTable& t) {
  std::int64_t sum = 0;
  for (const auto& [k, chi] : t.chi_xk) sum += (k - 1) * chi;
  return sum;
}

std::int64_t euler_star(const StratumTable& t) {
  validate_table(t);
  std::int64_t upstairs = 0;
  for (auto v : t.upstairs) upstairs += t.isolated ? sign_power(t.n - 1) * v : v;
  return (t.r - 1) + upstairs - multiple_point_euler(t);
}

std::int64_t mu_isolated(const StratumTable& t) {
  validate_table(t);
  if (!t.isolated) {
    throw AnalysisError(ErrorKind::invalid_input, "mu_isolated needs isolated_flag and Milnor-number upstairs data");
  }
  std::int64_t upstairs = 0;
  for (auto mu : t.upstairs) upstairs += mu;
  std::int64_t mu = sign_power(t.n - 1) * ((t.r - 1) - multiple_point_euler(t)) + upstairs;
  if (mu < 0) {
    throw AnalysisError(ErrorKind::inconsistent,
                        "inconsistent table: isolated-case Milnor number would be " + std::to_string(mu));
  }
  return mu;
}

std::int64_t unfolding_mu_plane_curve(std::int64_t r, std::int64_t delta) {
  if (r < 1) throw AnalysisError(ErrorKind::invalid_input, "r must be at least 1");
  std::int64_t mu = 2 * delta - r + 1;
  if (mu < 0) {
    throw AnalysisError(ErrorKind::inconsistent, "not realizable: 2*delta - r + 1 = " + std::to_string(mu));
  }
  return mu;
}

std::int64_t reduced_hyper_euler(std::int64_t r, std::int64_t chi) {
  if (r < 1) throw AnalysisError(ErrorKind::invalid_input, "r must be at least 1");
  return chi - (r - 1);
}

StratumTable nodes_only_table(std::int64_t r, std::int64_t delta) {
  StratumTable t;
  t.n = 2;
  t.r = r;
  if (delta != 0) t.chi_xk[2] = delta;
  t.upstairs.assign(static_cast<std::size_t>(r), 0);
  t.isolated = true;
  t.s = 0;
  return t;
}

RankProfile::RankProfile(std::initializer_list<std::pair<const int, std::uint64_t>> ranks) {
  for (const auto& [d, r] : ranks) set(d, r);
}

void RankProfile::set(int degree, std::uint64_t rank) {
  if (rank == 0) {
    ranks_.erase(degree);
  } else {
    ranks_[degree] = rank;
  }
}

std::uint64_t RankProfile::rank(int degree) const {
  auto it = ranks_.find(degree);
  return it == ranks_.end() ? 0 : it->second;
}

std::int64_t RankProfile::euler() const {
  std::int64_t sum = 0;
  for (const auto& [d, r] : ranks_) sum += sign_power(d) * static_cast<std::int64_t>(r);
  return sum;
}

RankProfile RankProfile::mirrored() const {
  RankProfile out;
  for (const auto& [d, r] : ranks_) out.set(-d, r);
  return out;
}

MultiplicityPoint::MultiplicityPoint(std::uint64_t m) : m_(m) {
  if (m == 0) throw AnalysisError(ErrorKind::invalid_input, "m(x) must be at least 1");
}

RankProfile stalk_profile_I(MultiplicityPoint p, int n) { return RankProfile{{-n, p.m()}}; }

RankProfile costalk_profile_I(MultiplicityPoint p, int n) { return RankProfile{{n, p.m()}}; }

RankProfile stalk_profile_N(MultiplicityPoint p, int n) { return RankProfile{{-n + 1, p.m() - 1}}; }

RankProfile stalk_profile_constant(int n) { return RankProfile{{-n, 1}}; }

bool degree_range_check(int n, int s, const RankProfile& profile) {
  for (const auto& [k, rank] : profile.ranks()) {
    if (k < n - 1 - s || k > n - 1) return false;
  }
  return true;
}

std::int64_t stratum_sum_chi(std::span<const StratumContribution> strata) {
  std::int64_t sum = 0;
  for (const auto& s : strata) sum += s.chi * s.stalk_chi;
  return sum;
}

}  // namespace plcurve
