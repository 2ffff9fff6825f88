// qbern: tables, identity verification and classical-limit studies.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbern/qbern.h"

namespace {

enum Exit { kOk = 0, kFailures = 1, kArgument = 2, kDomain = 3, kInternal = 4 };

struct CommonOptions {
  std::string out;
  bool no_meta = false;
};

int status_exit(qbern_status s) {
  switch (s) {
    case QBERN_OK: return kOk;
    case QBERN_ERR_ARGUMENT: return kArgument;
    case QBERN_ERR_DOMAIN: return kDomain;
    default: return kInternal;
  }
}

int report(qbern_status s) {
  std::cerr << "qbern: " << qbern_last_error() << "\n";
  return status_exit(s);
}

struct CString {
  char* p = nullptr;
  ~CString() { qbern_string_free(p); }
};

// Validates each q and warns once per value outside (0,1).
int check_q_values(const std::vector<std::string>& values) {
  for (const std::string& q : values) {
    int in_unit = 0;
    if (qbern_status s = qbern_check_q(q.c_str(), &in_unit); s != QBERN_OK) return report(s);
    if (!in_unit) std::cerr << "qbern: warning: q = " << q << " lies outside (0,1); results are formal\n";
  }
  return kOk;
}

int emit(const std::string& text, const CommonOptions& common) {
  if (common.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return kOk;
  }
  std::ofstream f(common.out, std::ios::binary);
  if (!(f << text)) {
    std::cerr << "qbern: cannot write " << common.out << "\n";
    return kArgument;
  }
  return kOk;
}

qbern_meta make_meta(const std::string& command_line, const CommonOptions& common) {
  return qbern_meta{command_line.c_str(), common.no_meta ? 0 : 1};
}

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--out", common.out, "Write to PATH instead of stdout");
  cmd->add_flag("--no-meta", common.no_meta, "Omit command line and timestamp from the output");
}

}  // namespace

int main(int argc, char** argv) {
  std::string command_line;
  for (int i = 0; i < argc; ++i) command_line += (i ? " " : "") + std::string(argv[i]);

  CLI::App app{"Exact q-Bernoulli / q-Euler tables and identity checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qbern_version()));

  CommonOptions common;

  struct {
    std::string family, q, format = "json";
    int alpha = 1, n_max = 8;
  } table;
  CLI::App* table_cmd = app.add_subcommand("table", "Write a table of polynomials or numbers");
  table_cmd->add_option("--family", table.family, "qbernoulli|qeuler|qstirling|qbernstein|classical-bernoulli|classical-euler|stirling2")
      ->required();
  table_cmd->add_option("--alpha", table.alpha, "Order (the index k for qbernstein)");
  table_cmd->add_option("--n-max", table.n_max, "Largest index");
  table_cmd->add_option("--q", table.q, "q as a rational, e.g. 1/2");
  table_cmd->add_option("--format", table.format, "json|csv|latex");
  add_common(table_cmd, common);

  struct {
    std::string suite, format = "json";
    int n_max = 8;
    std::vector<int> alpha_set, m_set;
    std::vector<std::string> q_set;
  } verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check identities over a parameter grid");
  verify_cmd->add_option("--suite", verify.suite, "Suite name or 'all'")->required();
  verify_cmd->add_option("--n-max", verify.n_max, "Largest n (at least 2)");
  verify_cmd->add_option("--alpha-set", verify.alpha_set, "Comma-separated orders")->delimiter(',');
  verify_cmd->add_option("--m-set", verify.m_set, "Comma-separated moduli")->delimiter(',');
  verify_cmd->add_option("--q-set", verify.q_set, "Comma-separated q values")->delimiter(',');
  verify_cmd->add_option("--format", verify.format, "json");
  add_common(verify_cmd, common);

  struct {
    std::string family, x = "0", format = "json";
    int alpha = 1, n = 0;
    std::vector<std::string> q_seq;
  } limit;
  CLI::App* limit_cmd = app.add_subcommand("limit", "Distance to the classical polynomial as q approaches 1");
  limit_cmd->add_option("--family", limit.family, "qbernoulli|qeuler")->required();
  limit_cmd->add_option("--alpha", limit.alpha, "Order");
  limit_cmd->add_option("--n", limit.n, "Index")->required();
  limit_cmd->add_option("--x", limit.x, "Evaluation point");
  limit_cmd->add_option("--q-seq", limit.q_seq, "Comma-separated q values")->delimiter(',');
  limit_cmd->add_option("--format", limit.format, "json");
  add_common(limit_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "qbern: " << e.what() << "\n";
    return kArgument;
  }

  const qbern_meta meta = make_meta(command_line, common);

  if (table_cmd->parsed()) {
    if (!table.q.empty())
      if (int rc = check_q_values({table.q}); rc != kOk) return rc;
    qbern_table* t = nullptr;
    if (qbern_status s = qbern_table_create(table.family.c_str(), table.alpha, table.n_max,
                                            table.q.empty() ? nullptr : table.q.c_str(), &t);
        s != QBERN_OK)
      return report(s);
    std::unique_ptr<qbern_table, decltype(&qbern_table_free)> guard(t, qbern_table_free);
    CString text;
    if (qbern_status s = qbern_table_render(t, table.format.c_str(), &meta, &text.p); s != QBERN_OK) return report(s);
    return emit(text.p, common);
  }

  if (verify_cmd->parsed()) {
    if (verify.format != "json") {
      std::cerr << "qbern: verify writes json only\n";
      return kArgument;
    }
    if (int rc = check_q_values(verify.q_set); rc != kOk) return rc;
    std::vector<const char*> qs;
    for (const std::string& q : verify.q_set) qs.push_back(q.c_str());
    qbern_grid grid;
    qbern_grid_defaults(&grid);
    grid.n_max = verify.n_max;
    if (!verify.alpha_set.empty()) {
      grid.alpha_set = verify.alpha_set.data();
      grid.alpha_count = verify.alpha_set.size();
    }
    if (!verify.m_set.empty()) {
      grid.m_set = verify.m_set.data();
      grid.m_count = verify.m_set.size();
    }
    grid.q_set = qs.empty() ? nullptr : qs.data();
    grid.q_count = qs.size();
    qbern_reports* r = nullptr;
    if (qbern_status s = qbern_verify(verify.suite.c_str(), &grid, &r); s != QBERN_OK) return report(s);
    std::unique_ptr<qbern_reports, decltype(&qbern_reports_free)> guard(r, qbern_reports_free);
    CString text;
    if (qbern_status s = qbern_reports_render(r, &meta, &text.p); s != QBERN_OK) return report(s);
    if (int rc = emit(text.p, common); rc != kOk) return rc;
    const size_t binding = qbern_reports_binding_failures(r);
    std::cerr << "qbern: " << qbern_reports_count(r) << " reports, " << qbern_reports_passed(r) << " passed, "
              << binding << " binding failures";
    if (size_t v = qbern_reports_verdicts(r)) std::cerr << ", " << v << " verdict-only";
    std::cerr << "\n";
    return binding == 0 ? kOk : kFailures;
  }

  if (limit.format != "json") {
    std::cerr << "qbern: limit writes json only\n";
    return kArgument;
  }
  if (int rc = check_q_values(limit.q_seq); rc != kOk) return rc;
  std::vector<const char*> qs;
  for (const std::string& q : limit.q_seq) qs.push_back(q.c_str());
  qbern_limit* study = nullptr;
  if (qbern_status s = qbern_limit_create(limit.family.c_str(), limit.alpha, limit.n, limit.x.c_str(),
                                          qs.empty() ? nullptr : qs.data(), qs.size(), &study);
      s != QBERN_OK)
    return report(s);
  std::unique_ptr<qbern_limit, decltype(&qbern_limit_free)> guard(study, qbern_limit_free);
  CString text;
  if (qbern_status s = qbern_limit_render(study, &meta, &text.p); s != QBERN_OK) return report(s);
  return emit(text.p, common);
}
