#include "qbern/qspecial.hpp"

#include <string>

#include "qbern/error.hpp"

namespace qbern {

namespace {

void require_nonnegative(int value, const char* what) {
  if (value < 0) throw ArgumentError(std::string(what) + " must be nonnegative, got " + std::to_string(value));
}

// sum_n t^n / [n+1]_q!, i.e. (e_q(t) - 1)/t.
Series shifted_exponential(const QParam& q, int order) {
  Series s(order);
  Rational fact = 1;
  for (int n = 0; n <= order; ++n) {
    fact *= q_number(q, n + 1);
    s[n] = Poly2(1 / fact);
  }
  return s;
}

// The classical counterparts use n! in place of [n]_q!.
Series classical_exp(int order, bool with_x) {
  Series s(order);
  for (int n = 0; n <= order; ++n)
    s[n] = with_x ? Poly2::monomial(1 / factorial(n), static_cast<unsigned>(n), 0) : Poly2(1 / factorial(n));
  return s;
}

std::vector<Poly2> classical_table(bool bernoulli, int alpha, int max_n) {
  require_nonnegative(max_n, "table size");
  Series kernel(max_n);
  if (bernoulli) {
    Series shifted(max_n);
    for (int n = 0; n <= max_n; ++n) shifted[n] = Poly2(1 / factorial(n + 1));
    kernel = reciprocal(shifted);
  } else {
    Series denom = classical_exp(max_n, false) * Rational(1, 2);
    denom[0] = Poly2(1);  // (e^t + 1)/2
    kernel = reciprocal(denom);
  }
  Series gf = pow(kernel, alpha) * classical_exp(max_n, true);
  std::vector<Poly2> out;
  out.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) out.push_back(gf[n] * factorial(n));
  return out;
}

}  // namespace

std::string_view family_name(Family f) { return f == Family::q_bernoulli ? "qbernoulli" : "qeuler"; }

Series bernoulli_kernel(const QParam& q, int order) { return reciprocal(shifted_exponential(q, order)); }

Series euler_kernel(const QParam& q, int order) {
  Series half = eq_series(q, Rational(1), order) * Rational(1, 2);
  half[0] = Poly2(1);
  return reciprocal(half);
}

Series generating_series(const FamilySpec& spec, int order) {
  Series kernel = spec.kind == Family::q_bernoulli ? bernoulli_kernel(spec.q, order) : euler_kernel(spec.q, order);
  return pow(kernel, spec.alpha) * eq_series(spec.q, Var::x, order) * big_eq_series(spec.q, Var::y, order);
}

PolyTable make_table(const FamilySpec& spec, int max_n) {
  require_nonnegative(max_n, "table size");
  Series gf = generating_series(spec, max_n);
  PolyTable table{spec, max_n, {}};
  table.entries.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) table.entries.push_back(coefficient_as_polynomial(gf, n, spec.q));
  return table;
}

PolyTable q_bernoulli_table(const FamilySpec& spec, int max_n) {
  if (spec.kind != Family::q_bernoulli) throw ArgumentError("q_bernoulli_table needs a q-Bernoulli family spec");
  return make_table(spec, max_n);
}

PolyTable q_euler_table(const FamilySpec& spec, int max_n) {
  if (spec.kind != Family::q_euler) throw ArgumentError("q_euler_table needs a q-Euler family spec");
  return make_table(spec, max_n);
}

std::vector<Rational> q_number_sequence(const FamilySpec& spec, int max_n) {
  require_nonnegative(max_n, "sequence length");
  Series kernel = spec.kind == Family::q_bernoulli ? bernoulli_kernel(spec.q, max_n) : euler_kernel(spec.q, max_n);
  Series gf = pow(kernel, spec.alpha);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) out.push_back(coefficient_as_polynomial(gf, n, spec.q).coefficient(0, 0));
  return out;
}

std::vector<Rational> q_stirling2_column(const QParam& q, int k, int max_m) {
  require_nonnegative(k, "Stirling column index");
  require_nonnegative(max_m, "Stirling row bound");
  Series e_minus_one = eq_series(q, Rational(1), max_m);
  e_minus_one[0] = Poly2();
  Series power = pow(e_minus_one, k);
  Rational inv_kfact = 1 / q_factorial(q, k);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(max_m) + 1);
  for (int m = 0; m <= max_m; ++m) out.push_back(coefficient_as_polynomial(power, m, q).coefficient(0, 0) * inv_kfact);
  return out;
}

Rational q_stirling2(const QParam& q, int m, int k) {
  require_nonnegative(m, "Stirling row index");
  return q_stirling2_column(q, k, m).back();
}

Rational classical_stirling2(int n, int k) {
  require_nonnegative(n, "Stirling row index");
  require_nonnegative(k, "Stirling column index");
  if (k > n) return 0;
  std::vector<Rational> row(static_cast<std::size_t>(k) + 1, Rational(0));
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= n; ++i)
    for (int j = std::min(i, k); j >= 0; --j)
      row[static_cast<std::size_t>(j)] = j == 0 ? Rational(0) : j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j) - 1];
  return row[static_cast<std::size_t>(k)];
}

Poly2 q_bernstein(const QParam& q, int n, int k) {
  if (k < 0 || n < 0 || k > n)
    throw ArgumentError("q-Bernstein index out of range: n=" + std::to_string(n) + ", k=" + std::to_string(k));
  const int len = n - k;
  Poly2 tail;
  for (int j = 0; j <= len; ++j) {
    Rational c = q_binomial(q, len, j) * gauss_exponent(q, j);
    if (j % 2 == 1) c = -c;
    tail.add_term({static_cast<unsigned>(j), 0}, c);
  }
  return Poly2::monomial(1, static_cast<unsigned>(k), 0) * tail;
}

std::vector<Poly2> classical_bernoulli_table(int alpha, int max_n) { return classical_table(true, alpha, max_n); }
std::vector<Poly2> classical_euler_table(int alpha, int max_n) { return classical_table(false, alpha, max_n); }

Poly2 classical_bernoulli_poly(int n, int alpha) { return classical_bernoulli_table(alpha, n).back(); }
Poly2 classical_euler_poly(int n, int alpha) { return classical_euler_table(alpha, n).back(); }

Poly2 generalized_binomial_poly(int j) {
  require_nonnegative(j, "binomial index");
  Poly2 p(1);
  for (int i = 0; i < j; ++i) p *= Poly2::monomial(1, 1, 0) - Poly2(Rational(i));
  return p * Rational(1 / factorial(j));
}

Rational factorial(int n) {
  require_nonnegative(n, "factorial argument");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) throw ArgumentError("binomial index out of range");
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

}  // namespace qbern
