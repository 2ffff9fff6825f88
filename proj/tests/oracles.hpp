#pragma once

// Reference values computed without the series machinery: only q-integers and
// Gaussian binomials, via triangular recurrences.

#include <vector>

#include "qbern/qcore.hpp"

namespace oracle {

using qbern::QParam;
using qbern::Rational;

// sum_{k<m} [m k] B_k = [m == 1], solved for B_{m-1}
inline std::vector<Rational> bernoulli_numbers(const QParam& q, int n_max) {
  std::vector<Rational> b;
  for (int m = 1; m <= n_max + 1; ++m) {
    Rational s = m == 1 ? 1 : 0;
    for (int k = 0; k < m - 1; ++k) s -= qbern::q_binomial(q, m, k) * b[static_cast<std::size_t>(k)];
    b.push_back(s / qbern::q_binomial(q, m, m - 1));
  }
  return b;
}

// sum_{k<m} [m k] E_k + 2 E_m = 2 [m == 0]
inline std::vector<Rational> euler_numbers(const QParam& q, int n_max) {
  std::vector<Rational> e;
  for (int m = 0; m <= n_max; ++m) {
    Rational s = m == 0 ? 2 : 0;
    for (int k = 0; k < m; ++k) s -= qbern::q_binomial(q, m, k) * e[static_cast<std::size_t>(k)];
    e.push_back(s / 2);
  }
  return e;
}

// sum_{k<m} C(m,k) B_k = [m == 1] at q = 1
inline std::vector<Rational> classical_bernoulli_numbers(int n_max) {
  std::vector<Rational> b;
  for (int m = 1; m <= n_max + 1; ++m) {
    Rational s = m == 1 ? 1 : 0;
    Rational c = 1;  // C(m,0)
    for (int k = 0; k < m - 1; ++k) {
      s -= c * b[static_cast<std::size_t>(k)];
      c = c * (m - k) / (k + 1);
    }
    b.push_back(s / m);
  }
  return b;
}

}  // namespace oracle
