#include "plcurve/rat.hpp"

#include "plcurve/errors.hpp"

namespace plcurve {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid input";
    case ErrorKind::undetermined: return "undetermined";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::inconsistent: return "inconsistent";
  }
  return "unknown";
}

Rat::Rat(long numerator, long denominator) : Rat(mpz_class(numerator), mpz_class(denominator)) {}

Rat::Rat(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw AnalysisError(ErrorKind::invalid_input, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rat Rat::parse(std::string_view numerator, std::string_view denominator) {
  auto parse_int = [](std::string_view text) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw AnalysisError(ErrorKind::invalid_input, "empty integer literal");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw AnalysisError(ErrorKind::invalid_input, "not an integer literal: '" + s + "'");
      }
    }
    if (s[0] == '+') s.erase(0, 1);
    return mpz_class(s, 10);
  };
  return Rat(parse_int(numerator), parse_int(denominator));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw AnalysisError(ErrorKind::invalid_input, "division by zero");
  value_ /= o.value_;
  return *this;
}

void Rat::subtract_product(const Rat& b, const Rat& c) {
  thread_local mpq_class scratch;
  mpq_mul(scratch.get_mpq_t(), b.value_.get_mpq_t(), c.value_.get_mpq_t());
  mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
}

Rat pow(const Rat& base, unsigned exponent) {
  Rat result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace plcurve
