#ifndef PLCURVE_BIVAR_POLY_HPP
#define PLCURVE_BIVAR_POLY_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plcurve/rat.hpp"
#include "plcurve/series.hpp"

namespace plcurve {

/// x^x_exp * y^y_exp.
struct Monomial {
  unsigned x = 0;
  unsigned y = 0;

  unsigned total() const { return x + y; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Local degree order: lower total degree first, then higher x-exponent first.
/// The first term of a polynomial in this order is its local leading term.
struct LocalDegreeLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.x > b.x;
  }
};

enum class Var { x, y };

/// Polynomial in Q[x, y] with no stored zero coefficients.
class BivarPoly {
 public:
  using Terms = std::map<Monomial, Rat, LocalDegreeLess>;

  BivarPoly() = default;
  explicit BivarPoly(const std::vector<std::pair<Monomial, Rat>>& terms);

  static BivarPoly constant(const Rat& c);
  static BivarPoly variable(Var v);
  static BivarPoly term(const Rat& c, unsigned x_exp, unsigned y_exp);

  const Terms& terms() const { return terms_; }
  Rat coefficient(const Monomial& m) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  unsigned degree(Var v) const;
  unsigned total_degree() const;
  /// Smallest total degree of a term; 0 for the zero polynomial.
  unsigned order() const;

  void add_term(const Monomial& m, const Rat& c);
  BivarPoly scaled(const Rat& factor) const;

  /// Rescaled to coprime integer coefficients with a positive local leading
  /// term (the first term in LocalDegreeLess order).
  BivarPoly primitive_normalized() const;

  std::string str() const;

  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

 private:
  Terms terms_;
};

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
BivarPoly operator-(const BivarPoly& a);
BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
BivarPoly pow(const BivarPoly& base, unsigned exponent);

/// Quotient a / b; throws AnalysisError(inconsistent) when b does not divide a.
BivarPoly divide_exact(const BivarPoly& a, const BivarPoly& b);

BivarPoly poly_partial(const BivarPoly& p, Var v);

/// p(sx, sy) with precision propagated through every product and sum.
TruncatedSeries poly_eval_series(const BivarPoly& p, const TruncatedSeries& sx,
                                 const TruncatedSeries& sy);

}  // namespace plcurve

#endif  // PLCURVE_BIVAR_POLY_HPP
