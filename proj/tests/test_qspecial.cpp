#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qbern/error.hpp"
#include "qbern/qspecial.hpp"
#include "support.hpp"

using namespace qbern;
using test::Q;
using test::R;

namespace {

const Poly2 x = Poly2::variable(Var::x);
const Poly2 y = Poly2::variable(Var::y);

PolyTable bern(int alpha, const QParam& q, int n_max) { return make_table({Family::q_bernoulli, alpha, q}, n_max); }
PolyTable euler(int alpha, const QParam& q, int n_max) { return make_table({Family::q_euler, alpha, q}, n_max); }

}  // namespace

TEST(QBernoulli, LowEntries) {
  const QParam q = Q("1/2");
  PolyTable t = bern(1, q, 2);
  EXPECT_EQ(t[0], Poly2(1));
  EXPECT_EQ(evaluate(t[1], 0, 0), R("-2/3"));
  EXPECT_EQ(evaluate(t[2], 0, 0), R("2/21"));
  EXPECT_EQ(t[2], x * x + x * y * R("3/2") + y * y * R("1/2") - x - y + Poly2(R("2/21")));
}

TEST(QEuler, LowEntries) {
  PolyTable t = euler(1, Q("1/2"), 2);
  EXPECT_EQ(t[0], Poly2(1));
  EXPECT_EQ(evaluate(t[1], 0, 0), R("-1/2"));
  EXPECT_EQ(evaluate(t[2], 0, 0), R("-1/8"));
  for (const QParam& q : test::sample_qs()) EXPECT_EQ(evaluate(euler(1, q, 1)[1], 0, 0), R("-1/2"));
}

TEST(QNumbers, Examples) {
  EXPECT_EQ(q_number_sequence({Family::q_bernoulli, 1, Q("1/2")}, 1), (std::vector<Rational>{1, R("-2/3")}));
  EXPECT_EQ(q_number_sequence({Family::q_euler, 1, Q("1/3")}, 2)[2], R("-1/6"));
}

TEST(QNumbers, MatchRecurrenceOracle) {
  for (const QParam& q : test::sample_qs()) {
    EXPECT_EQ(q_number_sequence({Family::q_bernoulli, 1, q}, 12), oracle::bernoulli_numbers(q, 12));
    EXPECT_EQ(q_number_sequence({Family::q_euler, 1, q}, 12), oracle::euler_numbers(q, 12));
  }
}

TEST(QSpecial, TableKindIsChecked) {
  EXPECT_THROW(q_bernoulli_table({Family::q_euler, 1, Q("1/2")}, 2), ArgumentError);
  EXPECT_THROW(q_euler_table({Family::q_bernoulli, 1, Q("1/2")}, 2), ArgumentError);
  EXPECT_THROW(make_table({Family::q_euler, 1, Q("1/2")}, -1), ArgumentError);
}

TEST(QSpecialProperty, Degree) {
  for (const QParam& q : test::sample_qs())
    for (int alpha : {0, 1, 2, 3})
      for (const PolyTable& t : {bern(alpha, q, 8), euler(alpha, q, 8)})
        for (int n = 0; n <= 8; ++n) EXPECT_EQ(t[n].total_degree(), n);
}

TEST(QSpecialProperty, OrderAdditivity) {
  for (const QParam& q : {Q("1/2"), Q("3/4")})
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        PolyTable ta = bern(a, q, 8), tb = bern(b, q, 8), tab = bern(a + b, q, 8);
        for (int n = 0; n <= 8; ++n) {
          Poly2 sum;
          for (int k = 0; k <= n; ++k)
            sum += substitute(ta[k], Var::y, 0) * substitute(tb[n - k], Var::x, 0) * q_binomial(q, n, k);
          EXPECT_EQ(tab[n], sum) << "alpha=" << a << " beta=" << b << " n=" << n;
        }
      }
}

TEST(QSpecialProperty, OrderZeroIsPairPower) {
  for (const QParam& q : test::sample_qs()) {
    PolyTable b = bern(0, q, 10), e = euler(0, q, 10);
    for (int n = 0; n <= 10; ++n) {
      EXPECT_EQ(b[n], symbolic_pair_power(q, n));
      EXPECT_EQ(e[n], symbolic_pair_power(q, n));
      EXPECT_EQ(substitute(b[n], Var::x, 0), Poly2::monomial(gauss_exponent(q, n), 0, static_cast<unsigned>(n)));
    }
  }
}

TEST(QSpecialProperty, NegativeOrderInvertsPositive) {
  const QParam q = Q("1/3");
  Series k = bernoulli_kernel(q, 6);
  EXPECT_EQ(pow(k, 2) * pow(k, -2), Series::one(6));
  PolyTable t = bern(-1, q, 4);
  EXPECT_EQ(evaluate(t[1], 0, 0), 1 / q_number(q, 2));
}

TEST(QStirling, Examples) {
  const QParam q = Q("1/2");
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(q_stirling2(q, k, k), 1);
  for (int m = 0; m < 5; ++m)
    for (int k = m + 1; k <= 5; ++k) EXPECT_EQ(q_stirling2(q, m, k), 0);
  EXPECT_EQ(q_stirling2(q, 3, 2), R("7/3"));
  EXPECT_EQ(q_stirling2_column(q, 2, 3).back(), R("7/3"));
}

TEST(ClassicalStirling, Examples) {
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(classical_stirling2(n, n), 1);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(classical_stirling2(n, 0), 0);
  EXPECT_EQ(classical_stirling2(4, 2), 7);
  EXPECT_EQ(classical_stirling2(6, 3), 90);
}

TEST(QBernstein, Examples) {
  const QParam q = Q("1/2");
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(q_bernstein(q, n, n), Poly2::monomial(1, static_cast<unsigned>(n), 0));
  for (const QParam& qq : test::sample_qs()) EXPECT_EQ(q_bernstein(qq, 2, 1), x - x * x);
  EXPECT_EQ(q_bernstein(q, 2, 0), Poly2(1) - x * R("3/2") + x * x * R("1/2"));
  EXPECT_THROW(q_bernstein(q, 2, 3), ArgumentError);
}

TEST(Classical, Polynomials) {
  EXPECT_EQ(classical_bernoulli_poly(0), Poly2(1));
  EXPECT_EQ(classical_euler_poly(0), Poly2(1));
  EXPECT_EQ(classical_bernoulli_poly(2), x * x - x + Poly2(R("1/6")));
  EXPECT_EQ(classical_euler_poly(1), x - Poly2(R("1/2")));
  auto numbers = oracle::classical_bernoulli_numbers(10);
  auto table = classical_bernoulli_table(1, 10);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(evaluate(table[static_cast<std::size_t>(n)], 0, 0), numbers[static_cast<std::size_t>(n)]);
  // order 2 Bernoulli: B_1^(2)(x) = x - 1
  EXPECT_EQ(classical_bernoulli_poly(1, 2), x - Poly2(1));
}

TEST(Classical, GeneralizedBinomial) {
  EXPECT_EQ(generalized_binomial_poly(0), Poly2(1));
  EXPECT_EQ(generalized_binomial_poly(1), x);
  EXPECT_EQ(evaluate(generalized_binomial_poly(2), R("1/2"), 0), R("-1/8"));
  for (int n = 0; n <= 8; ++n)
    for (int j = 0; j <= n; ++j) EXPECT_EQ(evaluate(generalized_binomial_poly(j), n, 0), binomial(n, j));
}
