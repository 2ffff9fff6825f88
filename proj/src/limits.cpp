#include "qbern/limits.hpp"

#include "qbern/error.hpp"

namespace qbern {

namespace {

Rational abs_value(const Rational& r) { return r < 0 ? Rational(-r) : r; }

void require_sequence(std::span<const QParam> q_seq) {
  if (q_seq.empty()) throw ArgumentError("q sequence is empty");
}

}  // namespace

bool monotone_decrease(std::span<const Rational> errors) {
  for (std::size_t i = 1; i < errors.size(); ++i) {
    bool both_zero = errors[i] == 0 && errors[i - 1] == 0;
    if (!(errors[i] < errors[i - 1]) && !both_zero) return false;
  }
  return true;
}

std::vector<QParam> default_limit_sequence() {
  return {QParam(Rational(9, 10)), QParam(Rational(99, 100)), QParam(Rational(999, 1000))};
}

LimitStudy family_limit_study(Family kind, int alpha, int n, const Rational& x, std::span<const QParam> q_seq) {
  if (n < 0) throw ArgumentError("n must be nonnegative, got " + std::to_string(n));
  require_sequence(q_seq);
  LimitStudy study;
  study.kind = kind;
  study.alpha = alpha;
  study.n = n;
  study.x = x;
  const Poly2 classical =
      kind == Family::q_bernoulli ? classical_bernoulli_poly(n, alpha) : classical_euler_poly(n, alpha);
  const Rational target = evaluate(classical, x, 0);
  std::vector<Rational> errors;
  for (const QParam& q : q_seq) {
    PolyTable table = make_table(FamilySpec{kind, alpha, q}, n);
    Rational value = evaluate(table[n], x, 0);
    Rational err = abs_value(value - target);
    errors.push_back(err);
    study.points.push_back(LimitPoint{q, value, target, err});
  }
  study.monotone = monotone_decrease(errors);
  return study;
}

std::vector<BernsteinLimitRow> bernstein_limit_study(int n_max, std::span<const QParam> q_seq) {
  if (n_max < 0) throw ArgumentError("n_max must be nonnegative");
  require_sequence(q_seq);
  const Rational samples[] = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};

  // [n k]_q b_{n,k}(q;x) against C(n,k) x^k (1-x)^{n-k}
  std::vector<BernsteinLimitRow> rows;
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k) {
      BernsteinLimitRow row{n, k, {}, false};
      const Poly2 classical = Poly2::monomial(binomial(n, k), static_cast<unsigned>(k), 0) *
                              pow(Poly2(1) - Poly2::variable(Var::x), static_cast<unsigned>(n - k));
      for (const QParam& q : q_seq) {
        const Poly2 q_side = q_bernstein(q, n, k) * q_binomial(q, n, k);
        Rational worst;
        for (const Rational& x : samples) {
          Rational e = abs_value(evaluate(q_side, x, 0) - evaluate(classical, x, 0));
          if (e > worst) worst = e;
        }
        row.errors.push_back(worst);
      }
      row.monotone = monotone_decrease(row.errors);
      rows.push_back(std::move(row));
    }
  return rows;
}

std::vector<StirlingLimitRow> stirling_limit_study(int max_index, std::span<const QParam> q_seq) {
  if (max_index < 0) throw ArgumentError("max index must be nonnegative");
  require_sequence(q_seq);
  std::vector<std::vector<std::vector<Rational>>> columns;  // [q][k][m]
  for (const QParam& q : q_seq) {
    std::vector<std::vector<Rational>> by_k;
    for (int k = 0; k <= max_index; ++k) by_k.push_back(q_stirling2_column(q, k, max_index));
    columns.push_back(std::move(by_k));
  }
  std::vector<StirlingLimitRow> rows;
  for (int m = 0; m <= max_index; ++m)
    for (int k = 0; k <= max_index; ++k) {
      StirlingLimitRow row{m, k, {}, false};
      const Rational classical = classical_stirling2(m, k);
      for (const auto& by_k : columns)
        row.errors.push_back(abs_value(by_k[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)] - classical));
      row.monotone = monotone_decrease(row.errors);
      rows.push_back(std::move(row));
    }
  return rows;
}

}  // namespace qbern
