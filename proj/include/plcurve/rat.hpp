#ifndef PLCURVE_RAT_HPP
#define PLCURVE_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace plcurve {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(long numerator, long denominator);
  Rat(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rat(const mpz_class& integer) : value_(integer) {}

  /// Parses decimal integer strings; throws AnalysisError on bad digits or a
  /// zero denominator.
  static Rat parse(std::string_view numerator, std::string_view denominator = "1");

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  std::string str() const { return value_.get_str(); }

  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.value_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.value_ < b.value_; }

  /// a -= b * c without a temporary Rat for the product.
  void subtract_product(const Rat& b, const Rat& c);

 private:
  explicit Rat(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_;
};

Rat pow(const Rat& base, unsigned exponent);

}  // namespace plcurve

#endif  // PLCURVE_RAT_HPP
