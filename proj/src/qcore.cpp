#include "qbern/qcore.hpp"

#include <string>

#include "qbern/error.hpp"

namespace qbern {

namespace {

void require_nonnegative(int value, const char* what) {
  if (value < 0) throw ArgumentError(std::string(what) + " must be nonnegative, got " + std::to_string(value));
}

}  // namespace

QParam::QParam(Rational value) : value_(std::move(value)) {
  if (value_ == 0) throw DomainError("q must be nonzero");
  if (value_ == 1) throw DomainError("q must differ from 1 ([a]_q is undefined at q = 1)");
  // [2]_q = 1 + q vanishes, so no q-factorial beyond [1]_q! is invertible
  if (value_ == -1) throw DomainError("q = -1 makes [2]_q = 0");
  in_unit_interval_ = value_ > 0 && value_ < 1;
}

QParam QParam::parse(std::string_view text) { return QParam(parse_rational(text)); }

Rational q_number(const QParam& q, int a) {
  require_nonnegative(a, "q-number argument");
  return (1 - pow(q.value(), a)) / (1 - q.value());
}

Rational q_factorial(const QParam& q, int n) {
  require_nonnegative(n, "q-factorial argument");
  Rational r = 1;
  for (int k = 1; k <= n; ++k) r *= q_number(q, k);
  return r;
}

Rational q_binomial(const QParam& q, int n, int k) {
  if (k < 0 || n < 0 || k > n)
    throw ArgumentError("q-binomial index out of range: [" + std::to_string(n) + " " + std::to_string(k) + "]");
  const Rational& qv = q.value();
  return q_shifted_factorial(q, qv, n) / (q_shifted_factorial(q, qv, n - k) * q_shifted_factorial(q, qv, k));
}

Rational q_shifted_factorial(const QParam& q, const Rational& a, int n) {
  require_nonnegative(n, "q-shifted factorial length");
  Rational r = 1;
  Rational qj = 1;
  for (int j = 0; j < n; ++j) {
    r *= 1 - qj * a;
    qj *= q.value();
  }
  return r;
}

Rational gauss_exponent(const QParam& q, int k) {
  require_nonnegative(k, "Gaussian exponent index");
  return pow(q.value(), static_cast<long>(k) * (k - 1) / 2);
}

Rational q_pair_power(const QParam& q, const Rational& a, const Rational& b, int n) {
  require_nonnegative(n, "q-power exponent");
  Rational sum = 0;
  for (int k = 0; k <= n; ++k) sum += q_binomial(q, n, k) * gauss_exponent(q, k) * pow(a, n - k) * pow(b, k);
  return sum;
}

}  // namespace qbern
