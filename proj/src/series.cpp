#include "qbern/series.hpp"

#include <algorithm>
#include <string>

#include "qbern/error.hpp"

namespace qbern {

namespace {

void require_order(int order) {
  if (order < 0) throw ArgumentError("series order must be nonnegative, got " + std::to_string(order));
}

Poly2 argument_power(const ExpArgument& z, int n) {
  if (const Var* v = std::get_if<Var>(&z))
    return *v == Var::x ? Poly2::monomial(1, static_cast<unsigned>(n), 0) : Poly2::monomial(1, 0, static_cast<unsigned>(n));
  return Poly2(pow(std::get<Rational>(z), n));
}

}  // namespace

Series::Series(int order) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series::Series(int order, std::vector<Poly2> coeffs) : coeffs_(std::move(coeffs)) {
  require_order(order);
  if (coeffs_.size() != static_cast<std::size_t>(order) + 1)
    throw ArgumentError("series of order " + std::to_string(order) + " needs " + std::to_string(order + 1) +
                        " coefficients, got " + std::to_string(coeffs_.size()));
}

Series Series::one(int order) {
  Series s(order);
  s[0] = Poly2(1);
  return s;
}

Series Series::truncated(int order) const {
  require_order(order);
  if (order > this->order()) throw ArgumentError("cannot extend a truncated series");
  return Series(order, std::vector<Poly2>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Series operator*(const Series& a, const Series& b) {
  int n_max = std::min(a.order(), b.order());
  Series r(n_max);
  for (int n = 0; n <= n_max; ++n) {
    Poly2& c = r[n];
    for (int k = 0; k <= n; ++k) {
      if (a[k].is_zero() || b[n - k].is_zero()) continue;
      c += a[k] * b[n - k];
    }
  }
  return r;
}

Series operator+(const Series& a, const Series& b) {
  int n_max = std::min(a.order(), b.order());
  Series r(n_max);
  for (int n = 0; n <= n_max; ++n) r[n] = a[n] + b[n];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  int n_max = std::min(a.order(), b.order());
  Series r(n_max);
  for (int n = 0; n <= n_max; ++n) r[n] = a[n] - b[n];
  return r;
}

Series operator*(Series a, const Rational& c) {
  for (auto& p : a.coeffs_) p *= c;
  return a;
}

Series reciprocal(const Series& a) {
  const Poly2& c0 = a[0];
  if (c0.is_zero() || !c0.is_constant())
    throw DomainError("series reciprocal needs a nonzero constant leading coefficient");
  Rational inv = 1 / c0.coefficient(0, 0);
  Series b(a.order());
  b[0] = Poly2(inv);
  for (int n = 1; n <= a.order(); ++n) {
    Poly2 acc;
    for (int k = 1; k <= n; ++k) {
      if (a[k].is_zero() || b[n - k].is_zero()) continue;
      acc += a[k] * b[n - k];
    }
    b[n] = acc * Rational(-inv);
  }
  return b;
}

Series pow(const Series& a, int alpha) {
  Series base = alpha < 0 ? reciprocal(a) : a;
  unsigned e = alpha < 0 ? static_cast<unsigned>(-static_cast<long>(alpha)) : static_cast<unsigned>(alpha);
  Series result = Series::one(a.order());
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Series scale_argument(const Series& a, const Rational& c) {
  Series r = a;
  Rational cn = 1;
  for (int n = 0; n <= a.order(); ++n) {
    r[n] *= cn;
    cn *= c;
  }
  return r;
}

Series eq_series(const QParam& q, const ExpArgument& z, int order) {
  Series s(order);
  Rational fact = 1;
  for (int n = 0; n <= order; ++n) {
    if (n > 0) fact *= q_number(q, n);
    s[n] = argument_power(z, n) * Rational(1 / fact);
  }
  return s;
}

Series big_eq_series(const QParam& q, const ExpArgument& z, int order) {
  Series s(order);
  Rational fact = 1;
  for (int n = 0; n <= order; ++n) {
    if (n > 0) fact *= q_number(q, n);
    s[n] = argument_power(z, n) * Rational(gauss_exponent(q, n) / fact);
  }
  return s;
}

Poly2 coefficient_as_polynomial(const Series& a, int n, const QParam& q) {
  if (n < 0 || n > a.order())
    throw ArgumentError("coefficient index " + std::to_string(n) + " outside series order " + std::to_string(a.order()));
  return a[n] * q_factorial(q, n);
}

}  // namespace qbern
