#include "plcurve/bivar_poly.hpp"

#include <algorithm>
#include <sstream>

#include "plcurve/errors.hpp"

namespace plcurve {

BivarPoly::BivarPoly(const std::vector<std::pair<Monomial, Rat>>& terms) {
  for (const auto& [m, c] : terms) add_term(m, c);
}

BivarPoly BivarPoly::constant(const Rat& c) { return term(c, 0, 0); }

BivarPoly BivarPoly::variable(Var v) {
  return v == Var::x ? term(Rat(1), 1, 0) : term(Rat(1), 0, 1);
}

BivarPoly BivarPoly::term(const Rat& c, unsigned x_exp, unsigned y_exp) {
  BivarPoly p;
  p.add_term({x_exp, y_exp}, c);
  return p;
}

Rat BivarPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

bool BivarPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

unsigned BivarPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, v == Var::x ? m.x : m.y);
  return d;
}

unsigned BivarPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.total();
}

unsigned BivarPoly::order() const {
  return terms_.empty() ? 0 : terms_.begin()->first.total();
}

void BivarPoly::add_term(const Monomial& m, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BivarPoly BivarPoly::scaled(const Rat& factor) const {
  BivarPoly p;
  if (factor.is_zero()) return p;
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, c * factor);
  return p;
}

BivarPoly BivarPoly::primitive_normalized() const {
  if (terms_.empty()) return *this;
  mpz_class den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_class den = c.denominator();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
  }
  mpz_class num_gcd = 0;
  for (const auto& [m, c] : terms_) {
    mpz_class n = c.numerator() * (den_lcm / c.denominator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rat factor(den_lcm, num_gcd);
  if (terms_.begin()->second.sign() < 0) factor = -factor;
  return scaled(factor);
}

std::string BivarPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out << "-";
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rat(1);
    bool need_star = false;
    if (!unit || m.total() == 0) {
      out << mag.str();
      need_star = true;
    }
    auto factor = [&](char var, unsigned e) {
      if (e == 0) return;
      if (need_star) out << "*";
      out << var;
      if (e > 1) out << "^" << e;
      need_star = true;
    };
    factor('x', m.x);
    factor('y', m.y);
  }
  return out.str();
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly s = a;
  for (const auto& [m, c] : b.terms()) s.add_term(m, c);
  return s;
}

BivarPoly operator-(const BivarPoly& a) { return a.scaled(Rat(-1)); }

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly s = a;
  for (const auto& [m, c] : b.terms()) s.add_term(m, -c);
  return s;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly p;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      p.add_term({ma.x + mb.x, ma.y + mb.y}, ca * cb);
    }
  }
  return p;
}

BivarPoly pow(const BivarPoly& base, unsigned exponent) {
  BivarPoly result = BivarPoly::constant(Rat(1));
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

BivarPoly divide_exact(const BivarPoly& a, const BivarPoly& b) {
  if (b.is_zero()) throw AnalysisError(ErrorKind::invalid_input, "polynomial division by zero");
  // Graded division on the highest term: rbegin() is the maximum of the graded order.
  const auto& [lead_m, lead_c] = *b.terms().rbegin();
  BivarPoly quotient;
  BivarPoly remainder = a;
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = *remainder.terms().rbegin();
    if (rm.x < lead_m.x || rm.y < lead_m.y) {
      throw AnalysisError(ErrorKind::inconsistent,
                          "inexact polynomial division: (" + a.str() + ") / (" + b.str() + ")");
    }
    BivarPoly step = BivarPoly::term(rc / lead_c, rm.x - lead_m.x, rm.y - lead_m.y);
    quotient = quotient + step;
    remainder = remainder - step * b;
  }
  return quotient;
}

BivarPoly poly_partial(const BivarPoly& p, Var v) {
  BivarPoly d;
  for (const auto& [m, c] : p.terms()) {
    unsigned e = v == Var::x ? m.x : m.y;
    if (e == 0) continue;
    Monomial dm = v == Var::x ? Monomial{m.x - 1, m.y} : Monomial{m.x, m.y - 1};
    d.add_term(dm, c * Rat(static_cast<long>(e)));
  }
  return d;
}

TruncatedSeries poly_eval_series(const BivarPoly& p, const TruncatedSeries& sx,
                                 const TruncatedSeries& sy) {
  std::vector<TruncatedSeries> x_powers{TruncatedSeries::one(kDefaultPrecisionCap)};
  std::vector<TruncatedSeries> y_powers{TruncatedSeries::one(kDefaultPrecisionCap)};
  for (unsigned i = 1; i <= p.degree(Var::x); ++i) x_powers.push_back(x_powers.back() * sx);
  for (unsigned i = 1; i <= p.degree(Var::y); ++i) y_powers.push_back(y_powers.back() * sy);

  TruncatedSeries result(kDefaultPrecisionCap);
  for (const auto& [m, c] : p.terms()) {
    result = result + multiply(x_powers[m.x], y_powers[m.y]).scaled(c);
  }
  return result;
}

}  // namespace plcurve
