#pragma once

#include <span>
#include <variant>
#include <vector>

#include "qbern/poly.hpp"

namespace qbern {

/// Truncated power series c_0 + c_1 t + ... + c_N t^N with Poly2 coefficients.
///
/// Coefficients are stored raw (the plain coefficient of t^n). The q-EGF view
/// a_n = [n]_q! c_n used by the generating functions is available through
/// coefficient_as_polynomial(). Binary operations truncate to the smaller
/// order of their operands.
class Series {
 public:
  /// The zero series of the given order.
  explicit Series(int order);
  /// `coeffs` must hold exactly order + 1 entries.
  Series(int order, std::vector<Poly2> coeffs);

  static Series one(int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Poly2& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  Poly2& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  std::span<const Poly2> coefficients() const noexcept { return coeffs_; }

  Series truncated(int order) const;

  friend Series operator*(const Series& a, const Series& b);
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(Series a, const Rational& c);
  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Poly2> coeffs_;
};

/// Multiplicative inverse up to the series order. The constant coefficient
/// must be a nonzero constant polynomial (DomainError otherwise).
Series reciprocal(const Series& a);

/// a^alpha for any integer alpha; negative powers go through reciprocal().
Series pow(const Series& a, int alpha);

/// t -> c t, i.e. c_n -> c^n c_n.
Series scale_argument(const Series& a, const Rational& c);

/// Argument of a q-exponential: one of the variables, or a constant.
using ExpArgument = std::variant<Var, Rational>;

/// e_q(t z) = sum_n z^n t^n / [n]_q!.
Series eq_series(const QParam& q, const ExpArgument& z, int order);

/// E_q(t z) = sum_n q^{n(n-1)/2} z^n t^n / [n]_q!.
Series big_eq_series(const QParam& q, const ExpArgument& z, int order);

/// [n]_q! times the raw t^n coefficient.
Poly2 coefficient_as_polynomial(const Series& a, int n, const QParam& q);

}  // namespace qbern
