/* C interface to seqverify. All sequence values cross the boundary as
 * NUL-terminated decimal strings owned by the caller (free with
 * sv_string_free). */

#ifndef SEQVERIFY_H
#define SEQVERIFY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SvStatus {
  SV_STATUS_OK = 0,
  SV_STATUS_NULL_POINTER = 1,
  SV_STATUS_INVALID_ARGUMENT = 2,
  SV_STATUS_RANGE_ERROR = 3,
  SV_STATUS_INTEGRITY_ERROR = 4,
  SV_STATUS_PARSE_ERROR = 5,
  SV_STATUS_IO_ERROR = 6,
  SV_STATUS_PANIC = 7,
} SvStatus;

typedef enum SvMethod {
  SV_METHOD_ORACLE = 0,
  SV_METHOD_FAST = 1,
} SvMethod;

/**
 * Which column of a max/min split table to read.
 */
typedef enum SvTerm {
  SV_TERM_A = 0,
  SV_TERM_BIG_M = 1,
  SV_TERM_SMALL_M = 2,
} SvTerm;

typedef enum SvM1 {
  SV_M1_ZERO = 0,
  SV_M1_ONE = 1,
} SvM1;

typedef enum SvReportStatus {
  SV_REPORT_STATUS_PASS = 0,
  SV_REPORT_STATUS_FAIL = 1,
  SV_REPORT_STATUS_SKIPPED = 2,
} SvReportStatus;

typedef struct SvBinPartTable SvBinPartTable;

typedef struct SvConj115Table SvConj115Table;

typedef struct SvReportList SvReportList;

/**
 * Parity class counts; they fit in 64 bits for every n the brute force
 * accepts.
 */
typedef struct SvParitySplit {
  uint64_t ee;
  uint64_t eo;
  uint64_t oe;
  uint64_t oo;
} SvParitySplit;

/**
 * Fixed-size view of one report. `range_lo`/`range_hi` are meaningful
 * only when `status` is not skipped, `failure_index` only when it is fail.
 */
typedef struct SvReportSummary {
  enum SvReportStatus status;
  int64_t range_lo;
  int64_t range_hi;
  int64_t failure_index;
  double elapsed_ms;
} SvReportSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL if none. The
 * returned string is owned by the caller.
 */
char *sv_last_error_message(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void sv_string_free(char *s);

/**
 * AND-pair count for the decimal index `n` by the halving recurrence.
 *
 * # Safety
 * `n` must be a valid NUL-terminated string; `out` must be writable.
 */
enum SvStatus sv_and_pairs(const char *n, char **out);

/**
 * AND-pair count by enumeration; fails with a range error above the guard.
 *
 * # Safety
 * `out` must be writable.
 */
enum SvStatus sv_and_pairs_bruteforce(uint64_t n, char **out);

/**
 * Number of pairs below `n` with a zero bitwise AND, by digit DP.
 *
 * # Safety
 * `n` must be a valid NUL-terminated string; `out` must be writable.
 */
enum SvStatus sv_zero_and_pairs(const char *n, char **out);

/**
 * # Safety
 * `out` must point to a writable `SvParitySplit`.
 */
enum SvStatus sv_parity_split(uint64_t n, struct SvParitySplit *out);

/**
 * Binary partitions of `2n` by the partition DP.
 *
 * # Safety
 * `out` must be writable.
 */
enum SvStatus sv_binpart_oracle(size_t n, char **out);

/**
 * Builds `b(0..=n_max)` by the recurrence.
 *
 * # Safety
 * `out` must be writable.
 */
enum SvStatus sv_binpart_table_new(size_t n_max, struct SvBinPartTable **out);

/**
 * # Safety
 * `table` must be a live handle from [`sv_binpart_table_new`].
 */
size_t sv_binpart_table_n_max(const struct SvBinPartTable *table);

/**
 * # Safety
 * `table` must be a live handle; `out` must be writable.
 */
enum SvStatus sv_binpart_table_get(const struct SvBinPartTable *table, size_t n, char **out);

/**
 * # Safety
 * `table` must be NULL or a live handle; it is invalid afterwards.
 */
void sv_binpart_table_free(struct SvBinPartTable *table);

/**
 * Builds the max/min split table up to `n_max`, by the definition
 * (`SV_METHOD_ORACLE`) or the closed forms (`SV_METHOD_FAST`).
 *
 * # Safety
 * `out` must be writable.
 */
enum SvStatus sv_conj115_table_new(size_t n_max, enum SvMethod method, struct SvConj115Table **out);

/**
 * # Safety
 * `table` must be a live handle from [`sv_conj115_table_new`].
 */
size_t sv_conj115_table_n_max(const struct SvConj115Table *table);

/**
 * Reads `a(n)`, `M(n)` or `m(n)`. `M` and `m` start at `n = 2`.
 *
 * # Safety
 * `table` must be a live handle; `out` must be writable.
 */
enum SvStatus sv_conj115_table_get(const struct SvConj115Table *table,
                                   enum SvTerm term,
                                   size_t n,
                                   char **out);

/**
 * # Safety
 * `table` must be NULL or a live handle; it is invalid afterwards.
 */
void sv_conj115_table_free(struct SvConj115Table *table);

/**
 * Runs every identity of conjecture 110 or 115 up to `n_max`. `m1` is
 * ignored for 110.
 *
 * # Safety
 * `out` must be writable.
 */
enum SvStatus sv_verify(uint32_t conjecture, size_t n_max, enum SvM1 m1, struct SvReportList **out);

/**
 * Compares decimal `values` (element 0 at index `offset`) against b-file
 * text, producing a one-element report list.
 *
 * # Safety
 * `bfile_text` must be a valid string; `values` must point to `len` valid
 * strings; `out` must be writable.
 */
enum SvStatus sv_crosscheck(const char *bfile_text,
                            const char *const *values,
                            size_t len,
                            int64_t offset,
                            struct SvReportList **out);

/**
 * # Safety
 * `list` must be a live handle.
 */
size_t sv_report_list_len(const struct SvReportList *list);

/**
 * Number of failed reports in the list.
 *
 * # Safety
 * `list` must be a live handle.
 */
size_t sv_report_list_failures(const struct SvReportList *list);

/**
 * # Safety
 * `list` must be a live handle; `out` must be writable.
 */
enum SvStatus sv_report_summary(const struct SvReportList *list,
                                size_t i,
                                struct SvReportSummary *out);

/**
 * Identity name of report `i`, e.g. `"C115_COR3"`.
 *
 * # Safety
 * `list` must be a live handle; `out` must be writable.
 */
enum SvStatus sv_report_identity(const struct SvReportList *list, size_t i, char **out);

/**
 * Expected and actual values of the first failure of report `i`; a range
 * error if the report did not fail.
 *
 * # Safety
 * `list` must be a live handle; both out pointers must be writable.
 */
enum SvStatus sv_report_failure_values(const struct SvReportList *list,
                                       size_t i,
                                       char **expected,
                                       char **actual);

/**
 * All reports as JSON lines, one object per report.
 *
 * # Safety
 * `list` must be a live handle; `out` must be writable.
 */
enum SvStatus sv_report_list_json(const struct SvReportList *list, char **out);

/**
 * # Safety
 * `list` must be NULL or a live handle; it is invalid afterwards.
 */
void sv_report_list_free(struct SvReportList *list);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SEQVERIFY_H */
