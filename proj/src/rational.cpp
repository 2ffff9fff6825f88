#include "qbern/rational.hpp"

#include <cctype>
#include <cstdio>

#include "qbern/error.hpp"

namespace qbern {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational ratio(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ArgumentError("not a rational number: '" + std::string(text) + "' (expected p/q)");
  Integer d(std::string(den), 10);
  if (d == 0) throw ArgumentError("zero denominator in '" + std::string(text) + "'");
  Rational r(Integer(std::string(num), 10), d);
  r.canonicalize();
  if (!text.empty() && text.front() == '-') r = -r;
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_decimal(const Rational& value, int digits) {
  if (digits < 1) digits = 1;
  if (value == 0) return digits > 1 ? "0." + std::string(static_cast<size_t>(digits - 1), '0') + "e+00" : "0e+00";
  mpf_class f(value, static_cast<mp_bitcnt_t>(4 * digits + 128));
  mp_exp_t exponent = 0;
  std::string mantissa = f.get_str(exponent, 10, static_cast<size_t>(digits));
  std::string sign;
  if (!mantissa.empty() && mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  mantissa.resize(static_cast<size_t>(digits), '0');
  std::string out = sign + mantissa.substr(0, 1);
  if (digits > 1) out += "." + mantissa.substr(1);
  long e = static_cast<long>(exponent) - 1;
  char buf[32];
  std::snprintf(buf, sizeof buf, "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
  return out + buf;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    return 1 / pow(base, -exponent);
  }
  Integer num, den;
  auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  // base is canonical, so coprime num/den stay coprime
  Rational r;
  mpq_set_num(r.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(r.get_mpq_t(), den.get_mpz_t());
  return r;
}

}  // namespace qbern
