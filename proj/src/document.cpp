#include "qbern/document.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qbern/error.hpp"

namespace qbern {

using json = nlohmann::ordered_json;

namespace {

constexpr std::pair<TableFamily, std::string_view> kFamilies[] = {
    {TableFamily::qbernoulli, "qbernoulli"},
    {TableFamily::qeuler, "qeuler"},
    {TableFamily::qstirling, "qstirling"},
    {TableFamily::qbernstein, "qbernstein"},
    {TableFamily::classical_bernoulli, "classical-bernoulli"},
    {TableFamily::classical_euler, "classical-euler"},
    {TableFamily::stirling2, "stirling2"},
};

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json meta_json(const Meta& meta) {
  json m;
  m["version"] = QBERN_VERSION_STRING;
  if (meta.include_meta) {
    m["command_line"] = meta.command_line;
    m["timestamp"] = utc_timestamp();
  }
  return m;
}

std::string finish(const json& meta, json payload) {
  json doc;
  doc["meta"] = meta;
  doc["payload"] = std::move(payload);
  return doc.dump(2) + "\n";
}

json poly_json(const Poly2& p) {
  json arr = json::array();
  for (const auto& [mono, coeff] : p.terms())
    arr.push_back(json{{"dx", mono.dx}, {"dy", mono.dy}, {"coeff", to_string(coeff)}});
  return arr;
}

Poly2 poly_from_json(const json& arr) {
  if (!arr.is_array()) throw ArgumentError("polynomial must be a JSON array");
  Poly2 p;
  for (const json& t : arr) p.add_term({t.at("dx").get<unsigned>(), t.at("dy").get<unsigned>()}, parse_rational(t.at("coeff").get<std::string>()));
  return p;
}

std::string latex(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  std::string sign = r < 0 ? "-" : "";
  Integer num = abs(r.get_num());
  return sign + "\\frac{" + num.get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string table_symbol(const TableRequest& req, int n) {
  const std::string a = std::to_string(req.alpha);
  const std::string ns = std::to_string(n);
  switch (req.family) {
    case TableFamily::qbernoulli: return "\\mathfrak{B}^{(" + a + ")}_{" + ns + ",q}(x,y)";
    case TableFamily::qeuler: return "\\mathfrak{E}^{(" + a + ")}_{" + ns + ",q}(x,y)";
    case TableFamily::qbernstein: return "b_{" + ns + "," + a + "}(q;x)";
    case TableFamily::classical_bernoulli: return "B^{(" + a + ")}_{" + ns + "}(x)";
    case TableFamily::classical_euler: return "E^{(" + a + ")}_{" + ns + "}(x)";
    default: return "";
  }
}

std::string latex_header(const TableRequest& req, const Meta& meta) {
  std::string out = "% qbern " QBERN_VERSION_STRING "\n";
  if (meta.include_meta) out += "% " + meta.command_line + "\n";
  out += "% family " + std::string(table_family_name(req.family));
  if (req.q) out += ", q = " + to_string(req.q->value());
  return out + "\n";
}

std::string render_latex(const TableData& t, const Meta& meta) {
  std::string out = latex_header(t.request, meta);
  if (is_triangle_family(t.request.family)) {
    const char* name = t.request.family == TableFamily::qstirling ? "S_{2,q}" : "S_2";
    const int cols = t.request.n_max + 1;
    out += "\\begin{array}{c|" + std::string(static_cast<std::size_t>(cols), 'c') + "}\n";
    out += std::string(name) + "(n,k)";
    for (int k = 0; k < cols; ++k) out += " & " + std::to_string(k);
    out += " \\\\\n\\hline\n";
    int row = -1;
    for (const TriangleEntry& e : t.triangle) {
      if (e.n != row) {
        if (row >= 0) out += " \\\\\n";
        row = e.n;
        out += std::to_string(e.n);
      }
      out += " & " + latex(e.value);
    }
    if (row >= 0) out += " \\\\\n";
    return out + "\\end{array}\n";
  }
  out += "\\begin{align*}\n";
  for (std::size_t i = 0; i < t.polys.size(); ++i) {
    out += table_symbol(t.request, t.polys[i].n) + " &= " + latex(t.polys[i].poly);
    out += i + 1 < t.polys.size() ? " \\\\\n" : "\n";
  }
  return out + "\\end{align*}\n";
}

std::string render_csv(const TableData& t) {
  std::ostringstream os;
  if (is_triangle_family(t.request.family)) {
    os << "n,k,value\n";
    for (const TriangleEntry& e : t.triangle) os << e.n << ',' << e.k << ',' << to_string(e.value) << '\n';
  } else {
    os << "n,dx,dy,coeff\n";
    for (const PolyEntry& e : t.polys)
      for (const auto& [mono, coeff] : e.poly.terms()) os << e.n << ',' << mono.dx << ',' << mono.dy << ',' << to_string(coeff) << '\n';
  }
  return os.str();
}

json table_payload(const TableData& t) {
  const TableRequest& req = t.request;
  json p;
  p["kind"] = "table";
  p["family"] = table_family_name(req.family);
  if (req.family == TableFamily::qbernstein)
    p["k"] = req.alpha;
  else if (!is_triangle_family(req.family))
    p["alpha"] = req.alpha;
  if (req.q) p["q"] = to_string(req.q->value());
  p["n_max"] = req.n_max;
  json entries = json::array();
  if (is_triangle_family(req.family)) {
    for (const TriangleEntry& e : t.triangle) entries.push_back(json{{"n", e.n}, {"k", e.k}, {"value", to_string(e.value)}});
  } else {
    for (const PolyEntry& e : t.polys) entries.push_back(json{{"n", e.n}, {"poly", poly_json(e.poly)}});
  }
  p["entries"] = std::move(entries);
  return p;
}

json params_json(const ReportParams& params) {
  json p;
  p["n"] = params.n;
  if (params.alpha) p["alpha"] = *params.alpha;
  if (params.m) p["m"] = *params.m;
  if (params.k) p["k"] = *params.k;
  if (params.q) p["q"] = to_string(params.q->value());
  return p;
}

json report_json(const IdentityReport& r) {
  json j;
  j["identity"] = r.identity_id;
  j["params"] = params_json(r.params);
  j["pass"] = r.pass;
  if (r.verdict_only) j["verdict_only"] = true;
  if (r.correction_applied) j["correction_applied"] = *r.correction_applied;
  if (r.stated_form_of) j["stated_form_of"] = *r.stated_form_of;
  j["residual"] = poly_json(r.residual);
  // Passing reports are fully described by their zero residual.
  if (!r.pass) {
    j["lhs"] = poly_json(r.lhs);
    j["rhs"] = poly_json(r.rhs);
  }
  return j;
}

std::string decimal_error(const Rational& r) { return to_decimal(r, 17); }

}  // namespace

TableFamily parse_table_family(std::string_view name) {
  for (const auto& [f, text] : kFamilies)
    if (text == name) return f;
  throw ArgumentError("unknown family '" + std::string(name) + "'");
}

std::string_view table_family_name(TableFamily f) {
  for (const auto& [fam, text] : kFamilies)
    if (fam == f) return text;
  return "?";
}

bool is_triangle_family(TableFamily f) { return f == TableFamily::qstirling || f == TableFamily::stirling2; }

bool needs_q(TableFamily f) {
  return f == TableFamily::qbernoulli || f == TableFamily::qeuler || f == TableFamily::qstirling || f == TableFamily::qbernstein;
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "latex") return Format::latex;
  throw ArgumentError("unknown format '" + std::string(name) + "'");
}

TableData build_table(const TableRequest& request) {
  if (request.n_max < 0) throw ArgumentError("n_max must be nonnegative, got " + std::to_string(request.n_max));
  if (needs_q(request.family) && !request.q)
    throw ArgumentError("family " + std::string(table_family_name(request.family)) + " requires --q");
  TableData t;
  t.request = request;
  if (!needs_q(request.family)) t.request.q.reset();
  const int n_max = request.n_max;
  switch (request.family) {
    case TableFamily::qbernoulli:
    case TableFamily::qeuler: {
      Family kind = request.family == TableFamily::qbernoulli ? Family::q_bernoulli : Family::q_euler;
      PolyTable table = make_table(FamilySpec{kind, request.alpha, *request.q}, n_max);
      for (int n = 0; n <= n_max; ++n) t.polys.push_back({n, table[n]});
      break;
    }
    case TableFamily::classical_bernoulli:
    case TableFamily::classical_euler: {
      auto table = request.family == TableFamily::classical_bernoulli ? classical_bernoulli_table(request.alpha, n_max)
                                                                      : classical_euler_table(request.alpha, n_max);
      for (int n = 0; n <= n_max; ++n) t.polys.push_back({n, table[static_cast<std::size_t>(n)]});
      break;
    }
    case TableFamily::qbernstein: {
      const int k = request.alpha;
      if (k < 0 || k > n_max)
        throw ArgumentError("qbernstein index k (--alpha) must lie in 0..n_max, got " + std::to_string(k));
      for (int n = k; n <= n_max; ++n) t.polys.push_back({n, q_bernstein(*request.q, n, k)});
      break;
    }
    case TableFamily::qstirling: {
      std::vector<std::vector<Rational>> columns;
      for (int k = 0; k <= n_max; ++k) columns.push_back(q_stirling2_column(*request.q, k, n_max));
      for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k)
          t.triangle.push_back({n, k, columns[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)]});
      break;
    }
    case TableFamily::stirling2:
      for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k) t.triangle.push_back({n, k, classical_stirling2(n, k)});
      break;
  }
  return t;
}

std::string latex(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : p.terms()) {
    const bool negative = coeff < 0;
    Rational mag = negative ? Rational(-coeff) : coeff;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string vars;
    if (mono.dx > 0) vars += mono.dx == 1 ? "x" : "x^{" + std::to_string(mono.dx) + "}";
    if (mono.dy > 0) vars += mono.dy == 1 ? "y" : "y^{" + std::to_string(mono.dy) + "}";
    if (vars.empty() || mag != 1) out += latex(mag);
    out += vars;
  }
  return out;
}

std::string render_table(const TableData& table, Format format, const Meta& meta) {
  switch (format) {
    case Format::json: return finish(meta_json(meta), table_payload(table));
    case Format::csv: return render_csv(table);
    case Format::latex: return render_latex(table, meta);
  }
  return {};
}

std::string render_reports(Suite suite, const Grid& grid, std::span<const IdentityReport> reports, const Meta& meta) {
  json p;
  p["kind"] = "verify";
  p["suite"] = suite_name(suite);
  json g;
  g["n_max"] = grid.n_max;
  g["alpha_set"] = grid.alpha_set;
  g["m_set"] = grid.m_set;
  json qs = json::array();
  for (const QParam& q : grid.q_set) qs.push_back(to_string(q.value()));
  g["q_set"] = std::move(qs);
  p["grid"] = std::move(g);

  std::size_t passed = 0, verdicts = 0;
  for (const IdentityReport& r : reports) {
    passed += r.pass ? 1 : 0;
    verdicts += r.verdict_only ? 1 : 0;
  }
  json summary;
  summary["total"] = reports.size();
  summary["passed"] = passed;
  summary["failed"] = reports.size() - passed;
  summary["binding_failures"] = binding_failures(reports);
  summary["verdict_only"] = verdicts;
  json corrections = json::array();
  for (const std::string& id : corrections_used(reports)) {
    const Correction* c = find_correction(id);
    json entry{{"id", c->id}, {"category", c->category}, {"description", c->description}};
    json ids = json::array();
    for (std::string_view s : c->identities) ids.push_back(s);
    entry["identities"] = std::move(ids);
    corrections.push_back(std::move(entry));
  }
  summary["corrections"] = std::move(corrections);
  p["summary"] = std::move(summary);

  json list = json::array();
  for (const IdentityReport& r : reports) list.push_back(report_json(r));
  p["reports"] = std::move(list);
  return finish(meta_json(meta), std::move(p));
}

std::string render_limit(const LimitStudy& study, const Meta& meta) {
  json p;
  p["kind"] = "limit";
  p["family"] = family_name(study.kind);
  p["alpha"] = study.alpha;
  p["n"] = study.n;
  p["x"] = to_string(study.x);
  json points = json::array();
  for (const LimitPoint& pt : study.points)
    points.push_back(json{{"q", to_string(pt.q.value())},
                          {"value", to_string(pt.value)},
                          {"classical", to_string(pt.classical)},
                          {"error", to_string(pt.error)},
                          {"error_decimal", decimal_error(pt.error)}});
  p["points"] = std::move(points);
  p["monotone_decrease"] = study.monotone;
  return finish(meta_json(meta), std::move(p));
}

TableData parse_table_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("malformed table document: ") + e.what());
  }
  try {
    const json& p = doc.at("payload");
    if (p.at("kind").get<std::string>() != "table") throw ArgumentError("document payload is not a table");
    TableData t;
    t.request.family = parse_table_family(p.at("family").get<std::string>());
    if (p.contains("alpha")) t.request.alpha = p["alpha"].get<int>();
    if (p.contains("k")) t.request.alpha = p["k"].get<int>();
    if (p.contains("q")) t.request.q = QParam::parse(p["q"].get<std::string>());
    t.request.n_max = p.at("n_max").get<int>();
    for (const json& e : p.at("entries")) {
      if (is_triangle_family(t.request.family))
        t.triangle.push_back({e.at("n").get<int>(), e.at("k").get<int>(), parse_rational(e.at("value").get<std::string>())});
      else
        t.polys.push_back({e.at("n").get<int>(), poly_from_json(e.at("poly"))});
    }
    return t;
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("malformed table document: ") + e.what());
  }
}

}  // namespace qbern
