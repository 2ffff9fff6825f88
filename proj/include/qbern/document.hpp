#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qbern/identities.hpp"
#include "qbern/limits.hpp"

namespace qbern {

enum class TableFamily { qbernoulli, qeuler, qstirling, qbernstein, classical_bernoulli, classical_euler, stirling2 };

TableFamily parse_table_family(std::string_view name);
std::string_view table_family_name(TableFamily f);
/// True for the families whose entries are numbers indexed by (n, k).
bool is_triangle_family(TableFamily f);
bool needs_q(TableFamily f);

enum class Format { json, csv, latex };
Format parse_format(std::string_view name);

struct TableRequest {
  TableFamily family = TableFamily::qbernoulli;
  /// Order for the Bernoulli/Euler families; the fixed index k for qbernstein.
  int alpha = 1;
  int n_max = 0;
  std::optional<QParam> q;
};

struct PolyEntry {
  int n = 0;
  Poly2 poly;
};

struct TriangleEntry {
  int n = 0;
  int k = 0;
  Rational value;
};

struct TableData {
  TableRequest request;
  std::vector<PolyEntry> polys;
  std::vector<TriangleEntry> triangle;
};

/// Throws ArgumentError for a missing q, negative n_max, or a qbernstein k
/// outside 0..n_max.
TableData build_table(const TableRequest& request);

/// Document metadata. With include_meta false only the version is emitted,
/// which makes output a pure function of the arguments.
struct Meta {
  std::string command_line;
  bool include_meta = true;
};

std::string render_table(const TableData& table, Format format, const Meta& meta);
std::string render_reports(Suite suite, const Grid& grid, std::span<const IdentityReport> reports, const Meta& meta);
std::string render_limit(const LimitStudy& study, const Meta& meta);

/// Reads back a JSON table document produced by render_table.
TableData parse_table_json(std::string_view text);

/// Canonical-order LaTeX for a polynomial, e.g. "\frac{2}{21} - y + x^{2}".
std::string latex(const Poly2& p);

}  // namespace qbern
