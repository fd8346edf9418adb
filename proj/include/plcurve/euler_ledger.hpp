#ifndef PLCURVE_EULER_LEDGER_HPP
#define PLCURVE_EULER_LEDGER_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace plcurve {

/// Integer data of a parameterized hypersurface X in C^(n+1) with r source
/// points over the origin, and a function h on X.
///
/// chi_xk[k] is chi(X_k meet M_h), X_k the locus of points with exactly k
/// preimages. upstairs[i] is the reduced Euler characteristic of the Milnor
/// fiber of h o F at the i-th source point, or its Milnor number when
/// `isolated` is set.
struct StratumTable {
  std::int64_t n = 0;
  std::int64_t r = 1;
  std::map<std::int64_t, std::int64_t> chi_xk;
  std::vector<std::int64_t> upstairs;
  bool isolated = false;
  std::optional<std::int64_t> s;
};

/// Throws AnalysisError(invalid_input) naming the first broken constraint.
void validate_table(const StratumTable& table);

/// Euler characteristic of the multiple-point complex on the Milnor fiber,
/// sum over k >= 2 of (k - 1) * chi(X_k meet M_h).
std::int64_t multiple_point_euler(const StratumTable& table);

/// Reduced Euler characteristic of the Milnor fiber of h at the origin:
/// (r - 1) + sum_i upstairs~_i - sum_k (k - 1) chi_k.
std::int64_t euler_star(const StratumTable& table);

/// Milnor number of h when the origin is an isolated point of the
/// topological critical locus. Negative values mean the table contradicts
/// that hypothesis and throw AnalysisError(inconsistent).
std::int64_t mu_isolated(const StratumTable& table);

/// 2 delta - r + 1; throws inconsistent ("not realizable") when negative.
std::int64_t unfolding_mu_plane_curve(std::int64_t r, std::int64_t delta);

/// chi - (r - 1): drops the r - 1 summands sitting in degree zero at the origin.
std::int64_t reduced_hyper_euler(std::int64_t r, std::int64_t chi);

/// Table of a one-parameter unfolding of a plane curve (n = 2) whose
/// perturbation has only nodes: chi(X_2 meet M) = delta, trivial upstairs.
StratumTable nodes_only_table(std::int64_t r, std::int64_t delta);

/// Ranks of free cohomology groups by degree. Zero ranks are not stored.
class RankProfile {
 public:
  RankProfile() = default;
  RankProfile(std::initializer_list<std::pair<const int, std::uint64_t>> ranks);

  void set(int degree, std::uint64_t rank);
  std::uint64_t rank(int degree) const;
  const std::map<int, std::uint64_t>& ranks() const { return ranks_; }
  bool empty() const { return ranks_.empty(); }

  /// sum (-1)^k rank_k
  std::int64_t euler() const;
  /// Degree k moved to -k.
  RankProfile mirrored() const;

  friend bool operator==(const RankProfile&, const RankProfile&) = default;

 private:
  std::map<int, std::uint64_t> ranks_;
};

/// Number of preimages m(x) >= 1 of a point of X.
class MultiplicityPoint {
 public:
  explicit MultiplicityPoint(std::uint64_t m);
  std::uint64_t m() const { return m_; }

 private:
  std::uint64_t m_;
};

RankProfile stalk_profile_I(MultiplicityPoint p, int n);
RankProfile costalk_profile_I(MultiplicityPoint p, int n);
RankProfile stalk_profile_N(MultiplicityPoint p, int n);
/// Stalk of the constant sheaf shifted by n: rank 1 in degree -n.
RankProfile stalk_profile_constant(int n);

/// Reduced cohomology of M_h may only live in degrees [n - 1 - s, n - 1].
bool degree_range_check(int n, int s, const RankProfile& profile);

struct StratumContribution {
  std::int64_t chi = 0;
  std::int64_t stalk_chi = 0;
};

/// sum_S chi(S) * chi(stalk at S)
std::int64_t stratum_sum_chi(std::span<const StratumContribution> strata);

}  // namespace plcurve

#endif  // PLCURVE_EULER_LEDGER_HPP
