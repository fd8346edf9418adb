#ifndef PLCURVE_RESULTANT_HPP
#define PLCURVE_RESULTANT_HPP

#include <cstddef>
#include <vector>

#include "plcurve/bivar_poly.hpp"

namespace plcurve {

/// Polynomial in an auxiliary variable s whose coefficients live in Q[x, y].
/// coefficients()[k] multiplies s^k; the leading coefficient is nonzero.
class UniPolyOverBivar {
 public:
  /// Trailing zero coefficients are trimmed; throws if all are zero.
  explicit UniPolyOverBivar(std::vector<BivarPoly> coefficients);

  std::size_t degree() const { return coefficients_.size() - 1; }
  const std::vector<BivarPoly>& coefficients() const { return coefficients_; }

 private:
  std::vector<BivarPoly> coefficients_;
};

/// det of the (m+n)-square Sylvester matrix, p-rows first. Computed by
/// fraction-free Bareiss elimination over Q[x, y] with exact division.
/// Swapping the arguments multiplies the result by (-1)^(deg p * deg q).
BivarPoly sylvester_resultant(const UniPolyOverBivar& p, const UniPolyOverBivar& q);

/// Determinant of a square matrix over Q[x, y] (Bareiss).
BivarPoly bareiss_determinant(std::vector<std::vector<BivarPoly>> matrix);

}  // namespace plcurve

#endif  // PLCURVE_RESULTANT_HPP
