#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qbern/qspecial.hpp"

namespace qbern {

/// Parameter ranges an identity suite is instantiated over.
struct Grid {
  int n_max = 8;
  std::vector<int> alpha_set{1, 2, 3};
  std::vector<int> m_set{1, 2, 3};
  std::vector<QParam> q_set{QParam(Rational(1, 2)), QParam(Rational(1, 3)), QParam(Rational(3, 4))};

  /// Throws ArgumentError unless n_max >= 2, every set is nonempty and every
  /// m is positive.
  void validate() const;
};

/// The parameter tuple of one identity instance. Fields that do not apply to
/// an identity stay empty.
struct ReportParams {
  int n = 0;
  std::optional<int> alpha;
  std::optional<int> m;
  std::optional<int> k;
  std::optional<QParam> q;

  auto operator<=>(const ReportParams&) const = default;
};

struct IdentityReport {
  std::string identity_id;
  ReportParams params;
  Poly2 lhs;
  Poly2 rhs;
  Poly2 residual;
  /// Exactly residual.is_zero().
  bool pass = false;
  /// Comma-separated typo-ledger ids, when the checked form deviates from the
  /// stated one.
  std::optional<std::string> correction_applied;
  /// Set on the uncorrected ("as stated") variant of a corrected identity;
  /// names the corrected identity_id.
  std::optional<std::string> stated_form_of;
  /// The identity has no proof to hold it to; only the verdict is recorded.
  bool verdict_only = false;
};

/// One entry of the typo ledger: a documented deviation between an identity
/// as stated and the form that is checked.
struct Correction {
  std::string_view id;
  std::string_view category;
  std::string_view description;
  std::vector<std::string_view> identities;
};

std::span<const Correction> typo_ledger();
const Correction* find_correction(std::string_view id);

enum class Suite {
  lemma1,
  lemma2,
  lemma3,
  lemma4,
  lemma5,
  sp1,
  sp2,
  corollaries,
  stirling_theorem,
  bernstein,
  exp_inverse,
  alpha_zero,
  all,
};

Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

std::vector<IdentityReport> check_addition(const Grid& grid);
std::vector<IdentityReport> check_q_derivative(const Grid& grid);
std::vector<IdentityReport> check_difference(const Grid& grid);
std::vector<IdentityReport> check_inversion(const Grid& grid);
std::vector<IdentityReport> check_recurrence(const Grid& grid);
std::vector<IdentityReport> check_sp1(const Grid& grid);
std::vector<IdentityReport> check_sp2(const Grid& grid);
std::vector<IdentityReport> check_corollaries(const Grid& grid);
std::vector<IdentityReport> check_stirling_theorem(const Grid& grid);
std::vector<IdentityReport> check_bernstein(const Grid& grid);
std::vector<IdentityReport> check_exp_inverse(int order, std::span<const QParam> q_set);
std::vector<IdentityReport> check_alpha_zero(const Grid& grid);

/// Runs a suite (exp-inverse uses grid.n_max as the series order) and returns
/// the reports sorted by identity_id, then params.
std::vector<IdentityReport> run_suite(Suite suite, const Grid& grid);

/// Failures that count against the suite: reports that fail, excluding
/// verdict-only reports and stated-form variants whose corrected
/// counterpart passes at the same parameters.
std::size_t binding_failures(std::span<const IdentityReport> reports);

/// Ledger ids referenced by any report, in ledger order.
std::vector<std::string> corrections_used(std::span<const IdentityReport> reports);

}  // namespace qbern
