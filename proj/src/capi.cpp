#include "qbern/qbern.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <iterator>
#include <string>

#include "qbern/document.hpp"
#include "qbern/error.hpp"

struct qbern_table {
  qbern::TableData data;
};

struct qbern_reports {
  qbern::Suite suite;
  qbern::Grid grid;
  std::vector<qbern::IdentityReport> reports;
};

struct qbern_limit {
  qbern::LimitStudy study;
};

namespace {

thread_local std::string last_error;

qbern_status fail(qbern_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs body, mapping library exceptions onto status codes.
template <class F>
qbern_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return QBERN_OK;
  } catch (const qbern::ArgumentError& e) {
    return fail(QBERN_ERR_ARGUMENT, e.what());
  } catch (const qbern::DomainError& e) {
    return fail(QBERN_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(QBERN_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QBERN_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw qbern::ArgumentError(std::string(name) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qbern::Meta to_meta(const qbern_meta* meta) {
  qbern::Meta m;
  if (meta != nullptr) {
    m.command_line = meta->command_line != nullptr ? meta->command_line : "";
    m.include_meta = meta->include_meta != 0;
  }
  return m;
}

bool same_request(const qbern::TableRequest& a, const qbern::TableRequest& b) {
  return a.family == b.family && a.alpha == b.alpha && a.n_max == b.n_max && a.q == b.q;
}

constexpr int kDefaultAlpha[] = {1, 2, 3};
constexpr int kDefaultM[] = {1, 2, 3};

}  // namespace

extern "C" {

const char* qbern_version(void) { return QBERN_VERSION_STRING; }

const char* qbern_last_error(void) { return last_error.c_str(); }

void qbern_string_free(char* s) { std::free(s); }

qbern_status qbern_check_q(const char* q, int* in_unit) {
  return guarded([&] {
    require(q, "q");
    qbern::QParam p = qbern::QParam::parse(q);
    if (in_unit != nullptr) *in_unit = p.in_unit_interval() ? 1 : 0;
  });
}

void qbern_grid_defaults(qbern_grid* grid) {
  if (grid == nullptr) return;
  grid->n_max = qbern::Grid{}.n_max;
  grid->alpha_set = kDefaultAlpha;
  grid->alpha_count = std::size(kDefaultAlpha);
  grid->m_set = kDefaultM;
  grid->m_count = std::size(kDefaultM);
  grid->q_set = nullptr;
  grid->q_count = 0;
}

qbern_status qbern_table_create(const char* family, int alpha, int n_max, const char* q, qbern_table** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    qbern::TableRequest req;
    req.family = qbern::parse_table_family(family);
    req.alpha = alpha;
    req.n_max = n_max;
    if (q != nullptr) req.q = qbern::QParam::parse(q);
    *out = new qbern_table{qbern::build_table(req)};
  });
}

qbern_status qbern_table_from_json(const char* json, qbern_table** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new qbern_table{qbern::parse_table_json(json)};
  });
}

void qbern_table_free(qbern_table* table) { delete table; }

qbern_status qbern_table_render(const qbern_table* table, const char* format, const qbern_meta* meta, char** out) {
  return guarded([&] {
    require(table, "table");
    require(format, "format");
    require(out, "out");
    *out = dup(qbern::render_table(table->data, qbern::parse_format(format), to_meta(meta)));
  });
}

size_t qbern_table_size(const qbern_table* table) {
  if (table == nullptr) return 0;
  return table->data.polys.size() + table->data.triangle.size();
}

qbern_status qbern_table_coefficient(const qbern_table* table, int n, unsigned dx, unsigned dy, char** out) {
  return guarded([&] {
    require(table, "table");
    require(out, "out");
    for (const auto& e : table->data.polys)
      if (e.n == n) {
        *out = dup(qbern::to_string(e.poly.coefficient(dx, dy)));
        return;
      }
    for (const auto& e : table->data.triangle)
      if (e.n == n && e.k == static_cast<int>(dx) && dy == 0) {
        *out = dup(qbern::to_string(e.value));
        return;
      }
    throw qbern::ArgumentError("no entry with index " + std::to_string(n));
  });
}

qbern_status qbern_table_equal(const qbern_table* a, const qbern_table* b, int* equal) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(equal, "equal");
    const auto& x = a->data;
    const auto& y = b->data;
    bool same = same_request(x.request, y.request) && x.polys.size() == y.polys.size() &&
                x.triangle.size() == y.triangle.size();
    for (std::size_t i = 0; same && i < x.polys.size(); ++i)
      same = x.polys[i].n == y.polys[i].n && x.polys[i].poly == y.polys[i].poly;
    for (std::size_t i = 0; same && i < x.triangle.size(); ++i)
      same = x.triangle[i].n == y.triangle[i].n && x.triangle[i].k == y.triangle[i].k &&
             x.triangle[i].value == y.triangle[i].value;
    *equal = same ? 1 : 0;
  });
}

qbern_status qbern_verify(const char* suite, const qbern_grid* grid, qbern_reports** out) {
  return guarded([&] {
    require(suite, "suite");
    require(out, "out");
    qbern::Grid g;
    if (grid != nullptr) {
      g.n_max = grid->n_max;
      if (grid->alpha_set != nullptr && grid->alpha_count > 0)
        g.alpha_set.assign(grid->alpha_set, grid->alpha_set + grid->alpha_count);
      if (grid->m_set != nullptr && grid->m_count > 0) g.m_set.assign(grid->m_set, grid->m_set + grid->m_count);
      if (grid->q_set != nullptr && grid->q_count > 0) {
        g.q_set.clear();
        for (size_t i = 0; i < grid->q_count; ++i) {
          require(grid->q_set[i], "q value");
          g.q_set.push_back(qbern::QParam::parse(grid->q_set[i]));
        }
      }
    }
    qbern::Suite s = qbern::parse_suite(suite);
    auto reports = qbern::run_suite(s, g);
    *out = new qbern_reports{s, std::move(g), std::move(reports)};
  });
}

void qbern_reports_free(qbern_reports* reports) { delete reports; }

size_t qbern_reports_count(const qbern_reports* reports) { return reports == nullptr ? 0 : reports->reports.size(); }

size_t qbern_reports_passed(const qbern_reports* reports) {
  if (reports == nullptr) return 0;
  size_t n = 0;
  for (const auto& r : reports->reports) n += r.pass ? 1 : 0;
  return n;
}

size_t qbern_reports_binding_failures(const qbern_reports* reports) {
  return reports == nullptr ? 0 : qbern::binding_failures(reports->reports);
}

size_t qbern_reports_verdicts(const qbern_reports* reports) {
  if (reports == nullptr) return 0;
  size_t n = 0;
  for (const auto& r : reports->reports) n += r.verdict_only ? 1 : 0;
  return n;
}

const char* qbern_reports_identity(const qbern_reports* reports, size_t index) {
  if (reports == nullptr || index >= reports->reports.size()) return nullptr;
  return reports->reports[index].identity_id.c_str();
}

int qbern_reports_pass(const qbern_reports* reports, size_t index) {
  if (reports == nullptr || index >= reports->reports.size()) return -1;
  return reports->reports[index].pass ? 1 : 0;
}

qbern_status qbern_reports_render(const qbern_reports* reports, const qbern_meta* meta, char** out) {
  return guarded([&] {
    require(reports, "reports");
    require(out, "out");
    *out = dup(qbern::render_reports(reports->suite, reports->grid, reports->reports, to_meta(meta)));
  });
}

qbern_status qbern_limit_create(const char* family, int alpha, int n, const char* x, const char* const* q_seq,
                                size_t q_count, qbern_limit** out) {
  return guarded([&] {
    require(family, "family");
    require(x, "x");
    require(out, "out");
    std::string_view fam = family;
    qbern::Family kind;
    if (fam == "qbernoulli")
      kind = qbern::Family::q_bernoulli;
    else if (fam == "qeuler")
      kind = qbern::Family::q_euler;
    else
      throw qbern::ArgumentError("limit family must be qbernoulli or qeuler, got '" + std::string(fam) + "'");
    std::vector<qbern::QParam> qs;
    if (q_seq == nullptr || q_count == 0) {
      qs = qbern::default_limit_sequence();
    } else {
      for (size_t i = 0; i < q_count; ++i) {
        require(q_seq[i], "q value");
        qs.push_back(qbern::QParam::parse(q_seq[i]));
      }
    }
    *out = new qbern_limit{qbern::family_limit_study(kind, alpha, n, qbern::parse_rational(x), qs)};
  });
}

void qbern_limit_free(qbern_limit* study) { delete study; }

int qbern_limit_monotone(const qbern_limit* study) { return study != nullptr && study->study.monotone ? 1 : 0; }

size_t qbern_limit_count(const qbern_limit* study) { return study == nullptr ? 0 : study->study.points.size(); }

qbern_status qbern_limit_error(const qbern_limit* study, size_t index, char** out) {
  return guarded([&] {
    require(study, "study");
    require(out, "out");
    if (index >= study->study.points.size()) throw qbern::ArgumentError("point index out of range");
    *out = dup(qbern::to_string(study->study.points[index].error));
  });
}

qbern_status qbern_limit_render(const qbern_limit* study, const qbern_meta* meta, char** out) {
  return guarded([&] {
    require(study, "study");
    require(out, "out");
    *out = dup(qbern::render_limit(study->study, to_meta(meta)));
  });
}

}  // extern "C"
