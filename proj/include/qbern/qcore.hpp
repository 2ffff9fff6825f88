#pragma once

#include <compare>
#include <string_view>

#include "qbern/rational.hpp"

namespace qbern {

/// The deformation parameter q: any rational other than 0, 1 and -1.
///
/// Every identity checked by this library is a formal one, so values outside
/// the open unit interval are accepted; `in_unit_interval()` lets front ends
/// warn about them.
class QParam {
 public:
  explicit QParam(Rational value);
  static QParam parse(std::string_view text);

  const Rational& value() const noexcept { return value_; }
  bool in_unit_interval() const noexcept { return in_unit_interval_; }

  friend bool operator==(const QParam& a, const QParam& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const QParam& a, const QParam& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rational value_;
  bool in_unit_interval_;
};

/// [a]_q = (1 - q^a)/(1 - q) = 1 + q + ... + q^(a-1).
Rational q_number(const QParam& q, int a);

/// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
Rational q_factorial(const QParam& q, int n);

/// Gaussian binomial (q;q)_n / ((q;q)_{n-k} (q;q)_k). Requires 0 <= k <= n;
/// out-of-range indices throw rather than silently returning zero.
Rational q_binomial(const QParam& q, int n, int k);

/// (a;q)_n = prod_{j=0}^{n-1} (1 - q^j a).
Rational q_shifted_factorial(const QParam& q, const Rational& a, int n);

/// q^{k(k-1)/2}.
Rational gauss_exponent(const QParam& q, int k);

/// (a+b)_q^n = sum_k [n k]_q q^{k(k-1)/2} a^{n-k} b^k for scalar a, b.
Rational q_pair_power(const QParam& q, const Rational& a, const Rational& b, int n);

}  // namespace qbern
