#include "plcurve/branch.hpp"

#include <algorithm>
#include <numeric>

namespace plcurve {
namespace {

TruncatedSeries from_terms(const std::vector<Term>& terms, std::size_t precision) {
  TruncatedSeries s(precision);
  for (const auto& t : terms) s.add_term(t.exponent, t.coefficient);
  return s;
}

std::size_t max_exponent(const std::vector<Term>& terms) {
  std::size_t e = 0;
  for (const auto& t : terms) e = std::max(e, t.exponent);
  return e;
}

TruncatedSeries expand(const TruncatedSeries& stored, std::size_t known, std::size_t precision) {
  std::size_t p = std::min(precision, known);
  TruncatedSeries s(p);
  for (const auto& [e, c] : stored.terms()) s.add_term(e, c);
  return s;
}

}  // namespace

Branch Branch::polynomial(std::string label, const std::vector<Term>& x, const std::vector<Term>& y) {
  std::size_t p = std::max(max_exponent(x), max_exponent(y)) + 1;
  return Branch(std::move(label), from_terms(x, p), from_terms(y, p), kExact);
}

Branch Branch::series(std::string label, TruncatedSeries x, TruncatedSeries y) {
  std::size_t known = std::min(x.precision(), y.precision());
  return Branch(std::move(label), x.truncated(known), y.truncated(known), known);
}

TruncatedSeries Branch::x_series(std::size_t precision) const {
  return expand(x_, known_precision_, precision);
}

TruncatedSeries Branch::y_series(std::size_t precision) const {
  return expand(y_, known_precision_, precision);
}

std::size_t Branch::degree() const {
  std::size_t d = 0;
  if (!x_.is_zero()) d = std::max(d, x_.terms().rbegin()->first);
  if (!y_.is_zero()) d = std::max(d, y_.terms().rbegin()->first);
  return d;
}

std::size_t Branch::exponent_gcd() const {
  std::size_t g = 0;
  for (const auto& [e, c] : x_.terms()) g = std::gcd(g, e);
  for (const auto& [e, c] : y_.terms()) g = std::gcd(g, e);
  return g;
}

Branch Branch::truncated_polynomial(std::size_t precision) const {
  std::vector<Term> x;
  std::vector<Term> y;
  for (const auto& [e, c] : x_.terms()) {
    if (e < precision) x.push_back({c, e});
  }
  for (const auto& [e, c] : y_.terms()) {
    if (e < precision) y.push_back({c, e});
  }
  return polynomial(label_, x, y);
}

bool same_parameterization(const Branch& a, const Branch& b) {
  return a.known_precision() == b.known_precision() && a.x_terms() == b.x_terms() &&
         a.y_terms() == b.y_terms();
}

}  // namespace plcurve
