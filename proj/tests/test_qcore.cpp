#include <gtest/gtest.h>

#include "qbern/error.hpp"
#include "qbern/qcore.hpp"
#include "support.hpp"

using namespace qbern;
using test::Q;
using test::R;

TEST(QParam, RejectsDegenerateValues) {
  EXPECT_THROW(QParam(Rational(0)), DomainError);
  EXPECT_THROW(QParam(Rational(1)), DomainError);
  EXPECT_THROW(QParam(Rational(-1)), DomainError);
  EXPECT_THROW(QParam::parse("2/0"), ArgumentError);
  EXPECT_TRUE(Q("1/2").in_unit_interval());
  EXPECT_FALSE(Q("3/2").in_unit_interval());
  EXPECT_FALSE(Q("-1/2").in_unit_interval());
}

TEST(QCore, QNumber) {
  const QParam q = Q("1/2");
  EXPECT_EQ(q_number(q, 0), 0);
  EXPECT_EQ(q_number(q, 1), 1);
  EXPECT_EQ(q_number(q, 3), R("7/4"));
  EXPECT_THROW(q_number(q, -1), ArgumentError);
}

TEST(QCore, QFactorial) {
  const QParam q = Q("1/2");
  EXPECT_EQ(q_factorial(q, 0), 1);
  EXPECT_EQ(q_factorial(q, 1), 1);
  EXPECT_EQ(q_factorial(q, 3), R("21/8"));
}

TEST(QCore, QBinomial) {
  const QParam q = Q("1/2");
  EXPECT_EQ(q_binomial(q, 5, 0), 1);
  EXPECT_EQ(q_binomial(q, 2, 1), R("3/2"));
  EXPECT_EQ(q_binomial(q, 4, 2), R("35/16"));
  EXPECT_THROW(q_binomial(q, 2, 3), ArgumentError);
  EXPECT_THROW(q_binomial(q, 2, -1), ArgumentError);
}

TEST(QCore, ShiftedFactorial) {
  const QParam q = Q("1/2");
  EXPECT_EQ(q_shifted_factorial(q, 3, 0), 1);
  EXPECT_EQ(q_shifted_factorial(q, 1, 2), 0);
  EXPECT_EQ(q_shifted_factorial(q, 2, 2), 0);
  EXPECT_EQ(q_shifted_factorial(q, R("1/3"), 2), R("2/3") * R("5/6"));
}

TEST(QCore, GaussExponent) {
  const QParam q = Q("1/2");
  EXPECT_EQ(gauss_exponent(q, 0), 1);
  EXPECT_EQ(gauss_exponent(q, 1), 1);
  EXPECT_EQ(gauss_exponent(q, 3), R("1/8"));
}

TEST(QCore, PairPower) {
  const QParam q = Q("1/2");
  EXPECT_EQ(q_pair_power(q, 1, -1, 2), 0);
  EXPECT_EQ(q_pair_power(q, R("1/2"), -1, 1), R("-1/2"));
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(q_pair_power(q, R("5/3"), 0, n), pow(R("5/3"), n));
}

TEST(QCoreProperty, BinomialSymmetryAndPascal) {
  for (const QParam& q : test::sample_qs())
    for (int n = 0; n <= 12; ++n)
      for (int k = 0; k <= n; ++k) {
        EXPECT_EQ(q_binomial(q, n, k), q_binomial(q, n, n - k));
        if (k >= 1 && k <= n - 1)
          EXPECT_EQ(q_binomial(q, n, k), q_binomial(q, n - 1, k - 1) + pow(q.value(), k) * q_binomial(q, n - 1, k));
      }
}

TEST(QCoreProperty, QBinomialFormula) {
  for (const QParam& q : test::sample_qs())
    for (const Rational& a : {R("0"), R("1"), R("1/2"), R("-2")})
      for (int n = 0; n <= 10; ++n) {
        Rational sum;
        for (int k = 0; k <= n; ++k) sum += q_binomial(q, n, k) * gauss_exponent(q, k) * pow(Rational(-a), k);
        EXPECT_EQ(q_shifted_factorial(q, a, n), sum) << "n=" << n;
      }
}
