#pragma once

#include <string_view>
#include <vector>

#include "qbern/series.hpp"

namespace qbern {

enum class Family { q_bernoulli, q_euler };

std::string_view family_name(Family f);

/// Which polynomial family, of which integer order, at which q.
struct FamilySpec {
  Family kind;
  int alpha;
  QParam q;
};

/// Entries 0..max_n of a q-Bernoulli or q-Euler family, as polynomials in
/// (x, y). entries[n] has total degree at most n and entries[0] = 1.
struct PolyTable {
  FamilySpec spec;
  int max_n = 0;
  std::vector<Poly2> entries;

  const Poly2& operator[](int n) const { return entries.at(static_cast<std::size_t>(n)); }
};

/// t / (e_q(t) - 1), as the reciprocal of sum_n t^n / [n+1]_q!.
Series bernoulli_kernel(const QParam& q, int order);
/// 2 / (e_q(t) + 1).
Series euler_kernel(const QParam& q, int order);

/// kernel^alpha * e_q(tx) * E_q(ty), truncated at `order`.
Series generating_series(const FamilySpec& spec, int order);

PolyTable q_bernoulli_table(const FamilySpec& spec, int max_n);
PolyTable q_euler_table(const FamilySpec& spec, int max_n);
/// Dispatches on spec.kind.
PolyTable make_table(const FamilySpec& spec, int max_n);

/// The numbers B_n = B_n(0,0) (resp. E_n(0,0)) for n = 0..max_n.
std::vector<Rational> q_number_sequence(const FamilySpec& spec, int max_n);

/// q-Stirling number of the second kind: [m]_q! [t^m] (e_q(t) - 1)^k / [k]_q!.
Rational q_stirling2(const QParam& q, int m, int k);
/// S_{2,q}(m, k) for m = 0..max_m at fixed k, from a single series power.
std::vector<Rational> q_stirling2_column(const QParam& q, int k, int max_m);

/// Classical S_2(n, k) via S(n,k) = k S(n-1,k) + S(n-1,k-1).
Rational classical_stirling2(int n, int k);

/// b_{n,k}(q;x) = x^k (1 - x)_q^{n-k}, a polynomial in x alone. Note: no
/// Gaussian binomial prefactor.
Poly2 q_bernstein(const QParam& q, int n, int k);

/// Classical Bernoulli / Euler polynomials of integer order alpha, in x.
Poly2 classical_bernoulli_poly(int n, int alpha = 1);
Poly2 classical_euler_poly(int n, int alpha = 1);
std::vector<Poly2> classical_bernoulli_table(int alpha, int max_n);
std::vector<Poly2> classical_euler_table(int alpha, int max_n);

/// z(z-1)...(z-j+1)/j!, returned as a polynomial in x standing for z.
Poly2 generalized_binomial_poly(int j);

/// n! and C(n, k) as rationals.
Rational factorial(int n);
Rational binomial(int n, int k);

}  // namespace qbern
