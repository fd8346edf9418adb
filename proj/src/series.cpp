#include "plcurve/series.hpp"

#include <algorithm>
#include <sstream>

namespace plcurve {

std::string to_string(const SeriesOrder& order) {
  return order.exact ? std::to_string(order.value)
                     : "at-least(" + std::to_string(order.value) + ")";
}

TruncatedSeries::TruncatedSeries(const std::vector<std::pair<std::size_t, Rat>>& terms,
                                 std::size_t precision)
    : precision_(precision) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

TruncatedSeries TruncatedSeries::one(std::size_t precision) {
  return monomial(Rat(1), 0, precision);
}

TruncatedSeries TruncatedSeries::monomial(const Rat& coefficient, std::size_t exponent,
                                          std::size_t precision) {
  TruncatedSeries s(precision);
  s.add_term(exponent, coefficient);
  return s;
}

Rat TruncatedSeries::coefficient(std::size_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rat(0) : it->second;
}

SeriesOrder TruncatedSeries::order() const {
  if (terms_.empty()) return SeriesOrder::at_least(precision_);
  return SeriesOrder::of(terms_.begin()->first);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t precision) const {
  TruncatedSeries s(std::min(precision, precision_));
  for (const auto& [e, c] : terms_) {
    if (e >= s.precision_) break;
    s.terms_.emplace(e, c);
  }
  return s;
}

TruncatedSeries TruncatedSeries::scaled(const Rat& factor) const {
  TruncatedSeries s(precision_);
  if (factor.is_zero()) return s;
  for (const auto& [e, c] : terms_) s.terms_.emplace(e, c * factor);
  return s;
}

void TruncatedSeries::add_term(std::size_t exponent, const Rat& coefficient) {
  if (exponent >= precision_ || coefficient.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string TruncatedSeries::str(char var) const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out << "-";
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rat(1);
    if (!unit || e == 0) out << mag.str();
    if (e > 0) {
      if (!unit) out << "*";
      out << var;
      if (e > 1) out << "^" << e;
    }
  }
  if (!first) out << " + ";
  out << "O(" << var << "^" << precision_ << ")";
  return out.str();
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries s = a.truncated(std::min(a.precision(), b.precision()));
  for (const auto& [e, c] : b.terms()) s.add_term(e, c);
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& a) { return a.scaled(Rat(-1)); }

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t cap) {
  std::size_t ord_a = a.order().value;
  std::size_t ord_b = b.order().value;
  std::size_t precision = std::min({a.precision() + ord_b, b.precision() + ord_a, cap});
  TruncatedSeries s(precision);
  for (const auto& [ea, ca] : a.terms()) {
    if (ea >= precision) break;
    for (const auto& [eb, cb] : b.terms()) {
      if (ea + eb >= precision) break;
      s.add_term(ea + eb, ca * cb);
    }
  }
  return s;
}

TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op) {
  return op == SeriesOp::add ? a + b : multiply(a, b);
}

}  // namespace plcurve
