#include "qbern/poly.hpp"

#include <algorithm>
#include <vector>

#include "qbern/error.hpp"

namespace qbern {

Poly2::Poly2(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

Poly2 Poly2::monomial(const Rational& coeff, unsigned dx, unsigned dy) {
  Poly2 p;
  p.add_term({dx, dy}, coeff);
  return p;
}

Poly2 Poly2::variable(Var v) { return v == Var::x ? monomial(1, 1, 0) : monomial(1, 0, 1); }

bool Poly2::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

int Poly2::total_degree() const noexcept {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.dx + m.dy));
  return d;
}

int Poly2::degree_in(Var v) const noexcept {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(v == Var::x ? m.dx : m.dy));
  return d;
}

Rational Poly2::coefficient(unsigned dx, unsigned dy) const {
  auto it = terms_.find({dx, dy});
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly2::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly2& Poly2::operator+=(const Poly2& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly2& Poly2::operator*=(const Poly2& rhs) { return *this = *this * rhs; }

Poly2& Poly2::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 r;
  Rational prod;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term({ma.dx + mb.dx, ma.dy + mb.dy}, prod);
    }
  return r;
}

Poly2 operator-(Poly2 a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

Poly2 pow(const Poly2& p, unsigned exponent) {
  Poly2 result(1);
  Poly2 base = p;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational evaluate(const Poly2& p, const Rational& x0, const Rational& y0) {
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) sum += c * pow(x0, m.dx) * pow(y0, m.dy);
  return sum;
}

Poly2 substitute(const Poly2& p, Var v, const Rational& value) {
  Poly2 r;
  for (const auto& [m, c] : p.terms()) {
    if (v == Var::x)
      r.add_term({0, m.dy}, c * pow(value, m.dx));
    else
      r.add_term({m.dx, 0}, c * pow(value, m.dy));
  }
  return r;
}

Poly2 scale_variable(const Poly2& p, Var v, const Rational& c) {
  Poly2 r;
  for (const auto& [m, coeff] : p.terms()) r.add_term(m, coeff * pow(c, v == Var::x ? m.dx : m.dy));
  return r;
}

Poly2 compose(const Poly2& p, const Poly2& x_image, const Poly2& y_image) {
  std::vector<Poly2> xp{Poly2(1)}, yp{Poly2(1)};
  for (int d = 1; d <= p.degree_in(Var::x); ++d) xp.push_back(xp.back() * x_image);
  for (int d = 1; d <= p.degree_in(Var::y); ++d) yp.push_back(yp.back() * y_image);
  Poly2 r;
  for (const auto& [m, c] : p.terms()) r += c * (xp[m.dx] * yp[m.dy]);
  return r;
}

Poly2 jackson_derivative(const Poly2& p, Var v, const QParam& q) {
  Poly2 r;
  for (const auto& [m, c] : p.terms()) {
    unsigned d = v == Var::x ? m.dx : m.dy;
    if (d == 0) continue;
    Monomial lowered = v == Var::x ? Monomial{m.dx - 1, m.dy} : Monomial{m.dx, m.dy - 1};
    r.add_term(lowered, c * q_number(q, static_cast<int>(d)));
  }
  return r;
}

Poly2 symbolic_pair_power(const QParam& q, int n) {
  if (n < 0) throw ArgumentError("q-power exponent must be nonnegative");
  Poly2 r;
  for (int k = 0; k <= n; ++k)
    r.add_term({static_cast<unsigned>(n - k), static_cast<unsigned>(k)}, q_binomial(q, n, k) * gauss_exponent(q, k));
  return r;
}

}  // namespace qbern
