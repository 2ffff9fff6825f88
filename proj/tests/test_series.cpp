#include <random>

#include <gtest/gtest.h>

#include "qbern/error.hpp"
#include "qbern/series.hpp"
#include "support.hpp"

using namespace qbern;
using test::Q;
using test::R;

namespace {

const Poly2 x = Poly2::variable(Var::x);
const Poly2 y = Poly2::variable(Var::y);

Series scalar_series(std::initializer_list<Rational> c) {
  std::vector<Poly2> coeffs;
  for (const Rational& r : c) coeffs.emplace_back(r);
  const int order = static_cast<int>(coeffs.size()) - 1;
  return Series(order, std::move(coeffs));
}

}  // namespace

TEST(Series, Multiply) {
  EXPECT_EQ(scalar_series({1, 1, 0, 0}) * scalar_series({1, -1, 0, 0}), scalar_series({1, 0, -1, 0}));
  Series a = scalar_series({R("1/2"), 3, -1});
  EXPECT_EQ(a * Series::one(2), a);
  EXPECT_EQ(scalar_series({1, 1, 1, 1, 1}) * scalar_series({1, -1, 0, 0, 0}), Series::one(4));
}

TEST(Series, MixedOrderTruncatesToSmaller) {
  Series a = scalar_series({1, 1, 1, 1}), b = scalar_series({1, 1});
  EXPECT_EQ((a * b).order(), 1);
  EXPECT_EQ((a + b).order(), 1);
}

TEST(Series, Reciprocal) {
  EXPECT_EQ(reciprocal(scalar_series({1, 1, 0, 0})), scalar_series({1, -1, 1, -1}));
  EXPECT_EQ(reciprocal(Series::one(3)), Series::one(3));
  const QParam q = Q("1/2");
  EXPECT_EQ(reciprocal(eq_series(q, Rational(1), 3)), big_eq_series(q, Rational(-1), 3));
  EXPECT_THROW(reciprocal(scalar_series({0, 1})), DomainError);
  Series non_constant(1, {x, Poly2(1)});
  EXPECT_THROW(reciprocal(non_constant), DomainError);
}

TEST(Series, IntegerPower) {
  Series a = scalar_series({R("2/3"), 5, -1});
  EXPECT_EQ(pow(a, 0), Series::one(2));
  EXPECT_EQ(pow(a, 1), a);
  EXPECT_EQ(pow(scalar_series({1, 1, 0}), -2), scalar_series({1, -2, 3}));
}

TEST(Series, ScaleArgument) {
  Series a = scalar_series({1, 1, 1});
  EXPECT_EQ(scale_argument(a, 1), a);
  EXPECT_EQ(scale_argument(a, R("1/2")), scalar_series({1, R("1/2"), R("1/4")}));
  const QParam q = Q("1/3");
  Series e = scale_argument(eq_series(q, Rational(1), 6), R("-2/5"));
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(e[n], Poly2(pow(R("-2/5"), n) / q_factorial(q, n)));
}

TEST(Series, Exponentials) {
  const QParam q = Q("1/2");
  EXPECT_EQ(eq_series(q, Rational(0), 4), Series::one(4));
  EXPECT_EQ(big_eq_series(q, Rational(0), 4), Series::one(4));
  EXPECT_EQ(eq_series(q, Var::x, 2), Series(2, {Poly2(1), x, x * x * R("2/3")}));
  EXPECT_EQ(big_eq_series(q, Var::y, 2), Series(2, {Poly2(1), y, y * y * R("1/3")}));
  for (const QParam& qq : test::sample_qs()) {
    EXPECT_EQ(eq_series(qq, Rational(7), 5)[0], Poly2(1));
    EXPECT_EQ(eq_series(qq, Rational(1), 16) * big_eq_series(qq, Rational(-1), 16), Series::one(16));
  }
}

TEST(Series, CoefficientExtraction) {
  const QParam q = Q("1/2");
  EXPECT_EQ(coefficient_as_polynomial(Series::one(3), 0, q), Poly2(1));
  EXPECT_EQ(coefficient_as_polynomial(eq_series(q, Var::x, 3), 1, q), x);
  EXPECT_EQ(coefficient_as_polynomial(big_eq_series(q, Var::y, 3), 2, q), y * y * R("1/2"));
}

TEST(SeriesProperty, ReciprocalOfRandomSeries) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int trial = 0; trial < 40; ++trial) {
    const int order = 1 + trial % 16;
    std::vector<Poly2> c;
    c.emplace_back(qbern::ratio(num(rng) == 0 ? 1 : num(rng) * 2 + 1, den(rng)));
    for (int n = 1; n <= order; ++n)
      c.push_back(Poly2::monomial(qbern::ratio(num(rng), den(rng)), static_cast<unsigned>(n % 3), 0) + Poly2(qbern::ratio(num(rng), den(rng))));
    Series a(order, c);
    EXPECT_EQ(a * reciprocal(a), Series::one(order));
  }
}

TEST(SeriesProperty, DerivativeLadders) {
  // D_q e_q(xt) = t e_q(xt) and D_q E_q(yt) = t E_q(qyt), read off the q-EGF coefficients.
  for (const QParam& q : test::sample_qs()) {
    Series e = eq_series(q, Var::x, 10), big = big_eq_series(q, Var::y, 10);
    for (int n = 1; n <= 10; ++n) {
      Poly2 a_n = coefficient_as_polynomial(e, n, q), a_prev = coefficient_as_polynomial(e, n - 1, q);
      EXPECT_EQ(jackson_derivative(a_n, Var::x, q), a_prev * q_number(q, n));
      Poly2 b_n = coefficient_as_polynomial(big, n, q), b_prev = coefficient_as_polynomial(big, n - 1, q);
      EXPECT_EQ(jackson_derivative(b_n, Var::y, q), scale_variable(b_prev, Var::y, q.value()) * q_number(q, n));
    }
  }
}
