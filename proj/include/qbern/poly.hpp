#pragma once

#include <compare>
#include <map>

#include "qbern/qcore.hpp"
#include "qbern/rational.hpp"

namespace qbern {

enum class Var { x, y };

/// Exponent pair of x^dx y^dy. Ordered lexicographically by (dx, dy); this
/// order is the canonical term order for every serialized form.
struct Monomial {
  unsigned dx = 0;
  unsigned dy = 0;
  auto operator<=>(const Monomial&) const = default;
};

/// Sparse polynomial in x and y over the rationals. No stored coefficient is
/// ever zero, so structural equality is mathematical equality.
class Poly2 {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly2() = default;
  explicit Poly2(const Rational& constant);

  static Poly2 monomial(const Rational& coeff, unsigned dx, unsigned dy);
  static Poly2 variable(Var v);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::size_t size() const noexcept { return terms_.size(); }
  /// -1 for the zero polynomial.
  int total_degree() const noexcept;
  int degree_in(Var v) const noexcept;
  Rational coefficient(unsigned dx, unsigned dy) const;
  const Terms& terms() const noexcept { return terms_; }

  Poly2& operator+=(const Poly2& rhs);
  Poly2& operator-=(const Poly2& rhs);
  Poly2& operator*=(const Poly2& rhs);
  Poly2& operator*=(const Rational& c);

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(Poly2 a, const Rational& c) { return a *= c; }
  friend Poly2 operator*(const Rational& c, Poly2 a) { return a *= c; }
  friend Poly2 operator-(Poly2 a);
  friend bool operator==(const Poly2&, const Poly2&) = default;

  /// Adds coeff * x^dx y^dy, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& coeff);

 private:
  Terms terms_;
};

Poly2 pow(const Poly2& p, unsigned exponent);

Rational evaluate(const Poly2& p, const Rational& x0, const Rational& y0);

/// Partial evaluation: replaces one variable by a constant.
Poly2 substitute(const Poly2& p, Var v, const Rational& value);

/// Argument scaling v -> c*v.
Poly2 scale_variable(const Poly2& p, Var v, const Rational& c);

/// General substitution x -> x_image, y -> y_image.
Poly2 compose(const Poly2& p, const Poly2& x_image, const Poly2& y_image);

/// Jackson q-derivative in one variable: v^n -> [n]_q v^{n-1}.
Poly2 jackson_derivative(const Poly2& p, Var v, const QParam& q);

/// (x+y)_q^n = sum_k [n k]_q q^{k(k-1)/2} x^{n-k} y^k.
Poly2 symbolic_pair_power(const QParam& q, int n);

}  // namespace qbern
