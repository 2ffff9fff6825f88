#pragma once

#include <span>
#include <vector>

#include "qbern/qspecial.hpp"

namespace qbern {

/// One q of a classical-limit sequence.
struct LimitPoint {
  QParam q;
  Rational value;
  Rational classical;
  /// |value - classical|
  Rational error;
};

struct LimitStudy {
  Family kind = Family::q_bernoulli;
  int alpha = 1;
  int n = 0;
  Rational x;
  std::vector<LimitPoint> points;
  bool monotone = false;
};

/// True when each error is strictly below its predecessor, or both are zero.
bool monotone_decrease(std::span<const Rational> errors);

/// Compares P_{n,q}^(alpha)(x,0) with the classical order-alpha polynomial at x
/// for each q in q_seq.
LimitStudy family_limit_study(Family kind, int alpha, int n, const Rational& x, std::span<const QParam> q_seq);

/// Per (n,k): the largest |q-side - classical side| of the Bernstein
/// expansion over a fixed set of sample points, at each q of the sequence.
struct BernsteinLimitRow {
  int n = 0;
  int k = 0;
  std::vector<Rational> errors;
  bool monotone = false;
};
std::vector<BernsteinLimitRow> bernstein_limit_study(int n_max, std::span<const QParam> q_seq);

/// Per (m,k): |S_{2,q}(m,k) - S_2(m,k)| at each q of the sequence.
struct StirlingLimitRow {
  int m = 0;
  int k = 0;
  std::vector<Rational> errors;
  bool monotone = false;
};
std::vector<StirlingLimitRow> stirling_limit_study(int max_index, std::span<const QParam> q_seq);

/// 9/10, 99/100, 999/1000
std::vector<QParam> default_limit_sequence();

}  // namespace qbern
