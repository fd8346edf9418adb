#ifndef PLCURVE_BRANCH_ANALYSIS_HPP
#define PLCURVE_BRANCH_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plcurve/branch.hpp"

namespace plcurve {

/// Every stabilized computation starts at `start` and doubles; an answer is
/// accepted once it survives one doubling. Nothing runs past `cap`.
struct PrecisionPolicy {
  std::size_t start = 16;
  std::size_t cap = kDefaultPrecisionCap;
};

enum class ViolationKind {
  empty_germ,
  zero_branch,
  not_at_origin,
  not_one_to_one,
  repeated_component,
  undetermined,
};

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> branches;
  std::string message;
};

struct ValidationVerdict {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  std::string summary() const;
};

ValidationVerdict validate_germ(const CurveGerm& germ, const PrecisionPolicy& policy = {});

/// min(ord x, ord y). Throws undetermined when a series branch is too short to tell.
std::size_t branch_multiplicity(const Branch& b);

struct SemigroupData {
  /// Semigroup elements below the conductor (always starts with 0).
  std::vector<std::size_t> achieved_orders;
  std::vector<std::size_t> gaps;
  std::size_t conductor = 0;
  std::size_t precision_used = 0;

  std::size_t delta() const { return gaps.size(); }
};

/// Integers in [0, precision) that are not t-orders of any polynomial in
/// x(t), y(t), read off the pivots of an echelon basis of the image of
/// Q[x, y] in Q[t]/t^precision.
std::vector<std::size_t> semigroup_gaps_below(const Branch& b, std::size_t precision);

SemigroupData value_semigroup(const Branch& b, const PrecisionPolicy& policy = {});
std::size_t delta_branch(const Branch& b, const PrecisionPolicy& policy = {});

struct IntersectionResult {
  std::size_t value = 0;
  /// ord_t g_j(x_i(t), y_i(t)) with g_j the implicit equation of branch j.
  std::size_t substitution_order = 0;
  /// ord_t Res_s(x_j(s) - x_i(t), y_j(s) - y_i(t)).
  std::size_t resultant_order = 0;
  /// 0 when both branches are polynomial and the computation is exact.
  std::size_t precision_used = 0;
};

/// Intersection multiplicity of two distinct branches, computed by two routes
/// that must agree. Coincident branches throw invalid_input ("repeated component").
IntersectionResult intersection_multiplicity(const Branch& a, const Branch& b,
                                             const PrecisionPolicy& policy = {});

std::size_t delta_total(const CurveGerm& germ, const PrecisionPolicy& policy = {});

/// dim (Q[t_1]/t_1^N + ... + Q[t_r]/t_r^N) / image of Q[x, y].
std::size_t cokernel_dimension_at(const CurveGerm& germ, std::size_t precision);

struct CokernelResult {
  std::size_t dimension = 0;
  std::size_t precision_used = 0;
};

/// delta as the colength of the local ring in its normalization.
CokernelResult cokernel_dimension(const CurveGerm& germ, const PrecisionPolicy& policy = {});

struct MilnorFromDelta {
  std::size_t delta = 0;
  std::size_t r = 0;
  std::int64_t mu = 0;                  // 2 delta - r + 1
  std::int64_t complex_link_mu = 0;     // delta - r + 1
};

MilnorFromDelta milnor_from_delta(const CurveGerm& germ, const PrecisionPolicy& policy = {});

struct BranchInvariants {
  std::string label;
  std::size_t multiplicity = 0;
  SemigroupData semigroup;

  std::size_t delta() const { return semigroup.delta(); }
};

struct InvariantReport {
  std::string name;
  std::size_t r = 0;
  std::vector<BranchInvariants> per_branch;
  /// Symmetric; the diagonal is empty.
  std::vector<std::vector<std::optional<std::size_t>>> intersection_matrix;
  std::size_t delta_total = 0;
  std::int64_t mu_parameterized = 0;
  std::int64_t complex_link_mu = 0;
  std::size_t cokernel_delta = 0;
  std::optional<std::size_t> oracle_mu;
  std::optional<std::size_t> oracle_degree;
  std::optional<std::string> implicit_equation;
  bool consistent = false;
  std::size_t precision_used = 0;
};

/// Validates, then computes every invariant and the cokernel cross-check.
/// The oracle fields are left empty.
InvariantReport analyze_germ(const CurveGerm& germ, const PrecisionPolicy& policy = {});

}  // namespace plcurve

#endif  // PLCURVE_BRANCH_ANALYSIS_HPP
