#ifndef PLCURVE_IMPLICIT_ORACLE_HPP
#define PLCURVE_IMPLICIT_ORACLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "plcurve/bivar_poly.hpp"
#include "plcurve/branch.hpp"

namespace plcurve {

/// Truncation schedule for the local-algebra computation: the degree bound
/// rises by one from `start` until two consecutive bounds give equal values.
struct OraclePolicy {
  std::size_t start = 8;
  std::size_t cap = 512;
};

/// True when a polynomial branch passes through the origin at some parameter
/// value other than t = 0, i.e. x(t)/t^ord and y(t)/t^ord share a root. Such
/// a branch implicitizes to an equation with extra branches at the origin.
bool returns_to_origin(const Branch& b);

/// Primitive integer equation of the image of a polynomial branch:
/// +-Res_t(x - x(t), y - y(t)) with positive local leading term.
BivarPoly implicitize_branch(const Branch& b);

struct ImplicitFactor {
  std::string label;
  BivarPoly factor;
};

struct ImplicitCurve {
  BivarPoly g;
  std::vector<ImplicitFactor> provenance;
};

/// Product of the per-branch equations (the reduced equation of the germ).
ImplicitCurve implicitize_curve(const CurveGerm& germ);

/// dim Q[x,y] / (gens + m^(degree+1)).
std::size_t truncated_quotient_dimension(const std::vector<BivarPoly>& gens, std::size_t degree);

struct LocalAlgebraResult {
  std::size_t dimension = 0;
  /// Degree bound N with dim(N) == dim(N + 1).
  std::size_t stable_degree = 0;
  /// Every (degree, dimension) pair evaluated, in order.
  std::vector<std::pair<std::size_t, std::size_t>> trail;
};

/// Colength of the ideal generated by gens in the local ring at the origin.
/// Throws AnalysisError(undetermined) when the value is still changing at the cap,
/// which is what a non-isolated singularity looks like.
LocalAlgebraResult local_algebra_dimension(const std::vector<BivarPoly>& gens,
                                           const OraclePolicy& policy = {});

/// Milnor number dim O / (g_x, g_y).
LocalAlgebraResult milnor_implicit(const BivarPoly& g, const OraclePolicy& policy = {});

}  // namespace plcurve

#endif  // PLCURVE_IMPLICIT_ORACLE_HPP
