#include <cstring>
#include <string>

#include <gtest/gtest.h>

#include "qbern/qbern.h"

namespace {

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  qbern_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, Version) { EXPECT_STREQ(qbern_version(), QBERN_VERSION_STRING); }

TEST(CApi, TableCoefficients) {
  qbern_table* t = nullptr;
  ASSERT_EQ(qbern_table_create("qbernoulli", 1, 2, "1/2", &t), QBERN_OK);
  EXPECT_EQ(qbern_table_size(t), 3u);
  char* c = nullptr;
  ASSERT_EQ(qbern_table_coefficient(t, 1, 0, 0, &c), QBERN_OK);
  EXPECT_EQ(take(c), "-2/3");
  ASSERT_EQ(qbern_table_coefficient(t, 2, 0, 0, &c), QBERN_OK);
  EXPECT_EQ(take(c), "2/21");
  EXPECT_EQ(qbern_table_coefficient(t, 9, 0, 0, &c), QBERN_ERR_ARGUMENT);
  qbern_table_free(t);
}

TEST(CApi, ErrorCodes) {
  qbern_table* t = nullptr;
  EXPECT_EQ(qbern_table_create("qbernoulli", 1, 2, "1", &t), QBERN_ERR_DOMAIN);
  EXPECT_NE(std::strlen(qbern_last_error()), 0u);
  EXPECT_EQ(t, nullptr);
  EXPECT_EQ(qbern_table_create("qbernoulli", 1, 2, "one", &t), QBERN_ERR_ARGUMENT);
  EXPECT_EQ(qbern_table_create("nope", 1, 2, "1/2", &t), QBERN_ERR_ARGUMENT);
  EXPECT_EQ(qbern_table_create("qeuler", 1, 2, nullptr, &t), QBERN_ERR_ARGUMENT);
  EXPECT_EQ(qbern_table_create(nullptr, 1, 2, "1/2", &t), QBERN_ERR_ARGUMENT);
  ASSERT_EQ(qbern_table_create("stirling2", 1, 4, nullptr, &t), QBERN_OK);
  EXPECT_STREQ(qbern_last_error(), "");
  char* out = nullptr;
  EXPECT_EQ(qbern_table_render(t, "yaml", nullptr, &out), QBERN_ERR_ARGUMENT);
  ASSERT_EQ(qbern_table_coefficient(t, 4, 2, 0, &out), QBERN_OK);
  EXPECT_EQ(take(out), "7");
  qbern_table_free(t);
  int in_unit = -1;
  EXPECT_EQ(qbern_check_q("3/2", &in_unit), QBERN_OK);
  EXPECT_EQ(in_unit, 0);
  EXPECT_EQ(qbern_check_q("0", &in_unit), QBERN_ERR_DOMAIN);
}

TEST(CApi, JsonRoundTrip) {
  qbern_table* t = nullptr;
  ASSERT_EQ(qbern_table_create("qeuler", 2, 6, "1/3", &t), QBERN_OK);
  qbern_meta meta{"test", 1};
  char* text = nullptr;
  ASSERT_EQ(qbern_table_render(t, "json", &meta, &text), QBERN_OK);
  qbern_table* back = nullptr;
  ASSERT_EQ(qbern_table_from_json(text, &back), QBERN_OK);
  qbern_string_free(text);
  int equal = 0;
  ASSERT_EQ(qbern_table_equal(t, back, &equal), QBERN_OK);
  EXPECT_EQ(equal, 1);
  qbern_table* other = nullptr;
  ASSERT_EQ(qbern_table_create("qeuler", 2, 6, "1/2", &other), QBERN_OK);
  ASSERT_EQ(qbern_table_equal(t, other, &equal), QBERN_OK);
  EXPECT_EQ(equal, 0);
  qbern_table_free(other);
  qbern_table_free(back);
  qbern_table_free(t);
  EXPECT_EQ(qbern_table_from_json("not json", &back), QBERN_ERR_ARGUMENT);
}

TEST(CApi, Verify) {
  qbern_grid grid;
  qbern_grid_defaults(&grid);
  EXPECT_EQ(grid.n_max, 8);
  const char* qs[] = {"1/2"};
  grid.n_max = 16;
  grid.q_set = qs;
  grid.q_count = 1;
  qbern_reports* r = nullptr;
  ASSERT_EQ(qbern_verify("exp-inverse", &grid, &r), QBERN_OK);
  EXPECT_EQ(qbern_reports_count(r), 17u);
  EXPECT_EQ(qbern_reports_passed(r), 17u);
  EXPECT_EQ(qbern_reports_binding_failures(r), 0u);
  EXPECT_STREQ(qbern_reports_identity(r, 0), "exp-inverse");
  EXPECT_EQ(qbern_reports_pass(r, 0), 1);
  EXPECT_EQ(qbern_reports_pass(r, 99), -1);
  EXPECT_EQ(qbern_reports_identity(r, 99), nullptr);
  char* text = nullptr;
  ASSERT_EQ(qbern_reports_render(r, nullptr, &text), QBERN_OK);
  EXPECT_NE(take(text).find("\"suite\": \"exp-inverse\""), std::string::npos);
  qbern_reports_free(r);

  grid.n_max = 0;
  EXPECT_EQ(qbern_verify("all", &grid, &r), QBERN_ERR_ARGUMENT);
  EXPECT_EQ(qbern_verify("bogus", nullptr, &r), QBERN_ERR_ARGUMENT);
}

TEST(CApi, StirlingVerdictsAreNotBinding) {
  qbern_grid grid;
  qbern_grid_defaults(&grid);
  grid.n_max = 4;
  qbern_reports* r = nullptr;
  ASSERT_EQ(qbern_verify("stirling-theorem", &grid, &r), QBERN_OK);
  EXPECT_LT(qbern_reports_passed(r), qbern_reports_count(r));
  EXPECT_EQ(qbern_reports_verdicts(r), qbern_reports_count(r));
  EXPECT_EQ(qbern_reports_binding_failures(r), 0u);
  qbern_reports_free(r);
}

TEST(CApi, Limit) {
  const char* qs[] = {"9/10", "99/100"};
  qbern_limit* l = nullptr;
  ASSERT_EQ(qbern_limit_create("qeuler", 1, 2, "0", qs, 2, &l), QBERN_OK);
  EXPECT_EQ(qbern_limit_count(l), 2u);
  EXPECT_EQ(qbern_limit_monotone(l), 1);
  char* e = nullptr;
  ASSERT_EQ(qbern_limit_error(l, 1, &e), QBERN_OK);
  EXPECT_EQ(take(e), "1/400");
  EXPECT_EQ(qbern_limit_error(l, 2, &e), QBERN_ERR_ARGUMENT);
  qbern_limit_free(l);
  ASSERT_EQ(qbern_limit_create("qbernoulli", 1, 1, "0", nullptr, 0, &l), QBERN_OK);
  EXPECT_EQ(qbern_limit_count(l), 3u);
  qbern_limit_free(l);
  EXPECT_EQ(qbern_limit_create("qstirling", 1, 1, "0", nullptr, 0, &l), QBERN_ERR_ARGUMENT);
}
