/* C interface to the qbern library. All handles are opaque; every function
 * that can fail returns a qbern_status and leaves a message retrievable via
 * qbern_last_error() on the calling thread. Strings returned through char**
 * out-parameters are owned by the caller and released with qbern_string_free.
 */
#ifndef QBERN_H
#define QBERN_H

#include <stddef.h>

#if defined(QBERN_BUILDING_LIBRARY)
#define QBERN_API __attribute__((visibility("default")))
#else
#define QBERN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qbern_status {
  QBERN_OK = 0,
  QBERN_ERR_ARGUMENT = 2,
  QBERN_ERR_DOMAIN = 3,
  QBERN_ERR_INTERNAL = 4
} qbern_status;

typedef struct qbern_table qbern_table;
typedef struct qbern_reports qbern_reports;
typedef struct qbern_limit qbern_limit;

/* Output options. command_line is recorded in the metadata block unless
 * include_meta is 0, in which case only the library version is written. */
typedef struct qbern_meta {
  const char* command_line;
  int include_meta;
} qbern_meta;

/* Grid for identity suites. A NULL set pointer (or zero count) keeps the
 * default for that dimension; q values are rationals such as "3/4". */
typedef struct qbern_grid {
  int n_max;
  const int* alpha_set;
  size_t alpha_count;
  const int* m_set;
  size_t m_count;
  const char* const* q_set;
  size_t q_count;
} qbern_grid;

QBERN_API const char* qbern_version(void);
QBERN_API const char* qbern_last_error(void);
QBERN_API void qbern_string_free(char* s);

/* Validates a q value. *in_unit is set to 1 when 0 < q < 1, the regime in
 * which the q-exponentials converge; other valid q still work formally. */
QBERN_API qbern_status qbern_check_q(const char* q, int* in_unit);

/* Fills *grid with the default grid (q_set left NULL meaning the defaults). */
QBERN_API void qbern_grid_defaults(qbern_grid* grid);

/* family: qbernoulli | qeuler | qstirling | qbernstein | classical-bernoulli |
 * classical-euler | stirling2. For qbernstein alpha is the fixed index k.
 * q may be NULL for families that do not depend on q. */
QBERN_API qbern_status qbern_table_create(const char* family, int alpha, int n_max, const char* q, qbern_table** out);
/* Parses a JSON document written by qbern_table_render. */
QBERN_API qbern_status qbern_table_from_json(const char* json, qbern_table** out);
QBERN_API void qbern_table_free(qbern_table* table);
/* format: json | csv | latex */
QBERN_API qbern_status qbern_table_render(const qbern_table* table, const char* format, const qbern_meta* meta,
                                          char** out);
/* Number of entries (polynomials, or triangle cells). */
QBERN_API size_t qbern_table_size(const qbern_table* table);
/* Coefficient of x^dx y^dy in the polynomial with index n, as "p/q". For
 * triangle families dx is the column k and dy must be 0. */
QBERN_API qbern_status qbern_table_coefficient(const qbern_table* table, int n, unsigned dx, unsigned dy, char** out);
/* *equal = 1 when both tables hold the same family, parameters and values. */
QBERN_API qbern_status qbern_table_equal(const qbern_table* a, const qbern_table* b, int* equal);

/* suite: lemma1 ... alpha-zero | all. grid may be NULL for the defaults. */
QBERN_API qbern_status qbern_verify(const char* suite, const qbern_grid* grid, qbern_reports** out);
QBERN_API void qbern_reports_free(qbern_reports* reports);
QBERN_API size_t qbern_reports_count(const qbern_reports* reports);
QBERN_API size_t qbern_reports_passed(const qbern_reports* reports);
/* Failures that decide the exit status (see the README for the rule). */
QBERN_API size_t qbern_reports_binding_failures(const qbern_reports* reports);
/* Reports that record a verdict only and never count as failures. */
QBERN_API size_t qbern_reports_verdicts(const qbern_reports* reports);
/* Borrowed; valid while the handle lives. NULL when index is out of range. */
QBERN_API const char* qbern_reports_identity(const qbern_reports* reports, size_t index);
/* 1 pass, 0 fail, -1 out of range */
QBERN_API int qbern_reports_pass(const qbern_reports* reports, size_t index);
QBERN_API qbern_status qbern_reports_render(const qbern_reports* reports, const qbern_meta* meta, char** out);

/* family: qbernoulli | qeuler. q_seq NULL or empty means 9/10, 99/100, 999/1000. */
QBERN_API qbern_status qbern_limit_create(const char* family, int alpha, int n, const char* x,
                                          const char* const* q_seq, size_t q_count, qbern_limit** out);
QBERN_API void qbern_limit_free(qbern_limit* study);
QBERN_API int qbern_limit_monotone(const qbern_limit* study);
QBERN_API size_t qbern_limit_count(const qbern_limit* study);
/* Exact error |q-value - classical| at one point, as "p/q". */
QBERN_API qbern_status qbern_limit_error(const qbern_limit* study, size_t index, char** out);
QBERN_API qbern_status qbern_limit_render(const qbern_limit* study, const qbern_meta* meta, char** out);

#ifdef __cplusplus
}
#endif

#endif
