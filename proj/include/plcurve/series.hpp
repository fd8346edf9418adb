#ifndef PLCURVE_SERIES_HPP
#define PLCURVE_SERIES_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plcurve/rat.hpp"

namespace plcurve {

/// Global guard against precision blowup in products.
inline constexpr std::size_t kDefaultPrecisionCap = 4096;

/// t-adic valuation of a truncated series. When every known coefficient is
/// zero the true order is only bounded below by the precision.
struct SeriesOrder {
  std::size_t value = 0;
  bool exact = false;

  static SeriesOrder of(std::size_t v) { return {v, true}; }
  static SeriesOrder at_least(std::size_t v) { return {v, false}; }

  friend bool operator==(const SeriesOrder&, const SeriesOrder&) = default;
};

std::string to_string(const SeriesOrder& order);

/// Univariate power series over Q known modulo t^precision.
class TruncatedSeries {
 public:
  using Terms = std::map<std::size_t, Rat>;

  TruncatedSeries() = default;
  explicit TruncatedSeries(std::size_t precision) : precision_(precision) {}
  /// Terms at or beyond the precision are dropped, as are zero coefficients.
  TruncatedSeries(const std::vector<std::pair<std::size_t, Rat>>& terms, std::size_t precision);

  static TruncatedSeries one(std::size_t precision);
  static TruncatedSeries monomial(const Rat& coefficient, std::size_t exponent, std::size_t precision);

  std::size_t precision() const { return precision_; }
  const Terms& terms() const { return terms_; }
  Rat coefficient(std::size_t exponent) const;
  bool is_zero() const { return terms_.empty(); }

  SeriesOrder order() const;
  TruncatedSeries truncated(std::size_t precision) const;
  TruncatedSeries scaled(const Rat& factor) const;

  /// Adds coefficient * t^exponent in place; ignored beyond the precision.
  void add_term(std::size_t exponent, const Rat& coefficient);

  std::string str(char var = 't') const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  Terms terms_;
  std::size_t precision_ = 0;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);

/// Product precision is min(prec a + ord b, prec b + ord a), then capped.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b,
                         std::size_t cap = kDefaultPrecisionCap);
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return multiply(a, b);
}

enum class SeriesOp { add, mul };

inline SeriesOrder series_order(const TruncatedSeries& s) { return s.order(); }
TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op);

}  // namespace plcurve

#endif  // PLCURVE_SERIES_HPP
