#ifndef PLCURVE_BRANCH_HPP
#define PLCURVE_BRANCH_HPP

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "plcurve/bivar_poly.hpp"
#include "plcurve/series.hpp"

namespace plcurve {

/// One term c * t^e of a branch coordinate.
struct Term {
  Rat coefficient;
  std::size_t exponent = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A parameterized branch t -> (x(t), y(t)).
///
/// A polynomial branch is known exactly and can be expanded to any precision.
/// A series branch is only known modulo t^P and every computation on it is
/// bounded by P.
class Branch {
 public:
  static constexpr std::size_t kExact = std::numeric_limits<std::size_t>::max();

  static Branch polynomial(std::string label, const std::vector<Term>& x, const std::vector<Term>& y);
  static Branch series(std::string label, TruncatedSeries x, TruncatedSeries y);

  const std::string& label() const { return label_; }
  bool is_polynomial() const { return known_precision_ == kExact; }
  /// kExact for polynomial branches.
  std::size_t known_precision() const { return known_precision_; }

  /// Coordinates modulo t^precision, clipped to the known precision.
  TruncatedSeries x_series(std::size_t precision) const;
  TruncatedSeries y_series(std::size_t precision) const;

  /// Stored coefficients; for polynomial branches these are the full polynomials.
  const TruncatedSeries::Terms& x_terms() const { return x_.terms(); }
  const TruncatedSeries::Terms& y_terms() const { return y_.terms(); }

  /// Highest exponent present in x or y (0 when both are zero).
  std::size_t degree() const;
  /// gcd of all exponents appearing in x and y (0 when both are zero).
  std::size_t exponent_gcd() const;

  /// Polynomial branch made of the terms below the given degree bound.
  Branch truncated_polynomial(std::size_t precision) const;

 private:
  Branch(std::string label, TruncatedSeries x, TruncatedSeries y, std::size_t known_precision)
      : label_(std::move(label)), x_(std::move(x)), y_(std::move(y)), known_precision_(known_precision) {}

  std::string label_;
  TruncatedSeries x_;
  TruncatedSeries y_;
  std::size_t known_precision_;
};

bool same_parameterization(const Branch& a, const Branch& b);

/// A multi-germ: r pairwise distinct branches through the origin.
struct CurveGerm {
  std::string name;
  std::vector<Branch> branches;

  std::size_t r() const { return branches.size(); }
};

}  // namespace plcurve

#endif  // PLCURVE_BRANCH_HPP
