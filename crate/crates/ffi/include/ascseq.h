#ifndef ASCSEQ_H
#define ASCSEQ_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AscseqFamily {
  ASCSEQ_FAMILY_ASCENT = 0,
  ASCSEQ_FAMILY_INVERSION = 1,
  ASCSEQ_FAMILY_PERMUTATION = 2,
  ASCSEQ_FAMILY_MATRIX = 3,
} AscseqFamily;

typedef enum AscseqStatus {
  ASCSEQ_STATUS_OK = 0,
  ASCSEQ_STATUS_NULL_POINTER = 1,
  ASCSEQ_STATUS_INVALID_SEQUENCE = 2,
  ASCSEQ_STATUS_OUT_OF_RANGE = 3,
  ASCSEQ_STATUS_INVALID_ARGUMENT = 4,
  ASCSEQ_STATUS_BUFFER_TOO_SMALL = 5,
  ASCSEQ_STATUS_INTERNAL = 6,
} AscseqStatus;

/**
 * Opaque verification report.
 */
typedef struct AscseqReport AscseqReport;

/**
 * Opaque ascent sequence.
 */
typedef struct AscseqSequence AscseqSequence;

/**
 * Statistics of an ascent sequence.
 */
typedef struct AscseqStats {
  uint32_t asc;
  uint32_t rep;
  uint32_t zero;
  uint32_t max;
  uint32_t ealm;
  uint32_t rmin;
  uint32_t rpos;
} AscseqStats;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty when none. The pointer stays valid
 * until the next failing call on the same thread.
 */
const char *ascseq_last_error(void);

/**
 * Builds a sequence from `len` entries.
 *
 * # Safety
 * `entries` must point to `len` readable values (it may be null when `len` is 0) and `out`
 * must be a valid pointer.
 */
enum AscseqStatus ascseq_sequence_new(const uint32_t *entries,
                                      size_t len,
                                      struct AscseqSequence **out);

/**
 * # Safety
 * `seq` must come from this library and not have been freed; null is ignored.
 */
void ascseq_sequence_free(struct AscseqSequence *seq);

/**
 * # Safety
 * `seq` must be a live handle or null.
 */
size_t ascseq_sequence_len(const struct AscseqSequence *seq);

/**
 * Copies the entries into `buf`. `out_len` receives the length even when `cap` is too small.
 *
 * # Safety
 * `seq` must be a live handle, `buf` must have room for `cap` values, `out_len` valid.
 */
enum AscseqStatus ascseq_sequence_entries(const struct AscseqSequence *seq,
                                          uint32_t *buf,
                                          size_t cap,
                                          size_t *out_len);

/**
 * # Safety
 * `seq` must be a live handle and `out` valid.
 */
enum AscseqStatus ascseq_sequence_stats(const struct AscseqSequence *seq, struct AscseqStats *out);

/**
 * Phi(seq) as a new handle.
 *
 * # Safety
 * `seq` must be a live handle and `out` valid.
 */
enum AscseqStatus ascseq_phi(const struct AscseqSequence *seq, struct AscseqSequence **out);

/**
 * # Safety
 * `seq` must be a live handle and `out` valid.
 */
enum AscseqStatus ascseq_phi_inv(const struct AscseqSequence *seq, struct AscseqSequence **out);

/**
 * Number of objects of length n in a family (permutations restricted to pattern avoiders).
 *
 * # Safety
 * `out` must be valid.
 */
enum AscseqStatus ascseq_count(enum AscseqFamily family, size_t n, uint64_t *out);

/**
 * Runs a suite ("lemmas", "phi", "distributions", "genfun", "qseries", "conjecture", "all").
 * `n` and `order` of 0 pick the defaults.
 *
 * # Safety
 * `suite` must be a NUL-terminated string and `out` valid.
 */
enum AscseqStatus ascseq_verify(const char *suite,
                                size_t n,
                                size_t order,
                                uint64_t seed,
                                size_t points,
                                bool heavy,
                                struct AscseqReport **out);

/**
 * # Safety
 * `report` must be a live handle or null.
 */
bool ascseq_report_passed(const struct AscseqReport *report);

/**
 * # Safety
 * `report` must be a live handle or null.
 */
size_t ascseq_report_len(const struct AscseqReport *report);

/**
 * Verdict of check `index`; false when out of range.
 *
 * # Safety
 * `report` must be a live handle or null.
 */
bool ascseq_report_verdict(const struct AscseqReport *report, size_t index);

/**
 * The report as JSON. Free the string with `ascseq_string_free`; null on failure.
 *
 * # Safety
 * `report` must be a live handle.
 */
char *ascseq_report_json(const struct AscseqReport *report);

/**
 * # Safety
 * `report` must come from `ascseq_verify` and not have been freed; null is ignored.
 */
void ascseq_report_free(struct AscseqReport *report);

/**
 * # Safety
 * `s` must come from this library and not have been freed; null is ignored.
 */
void ascseq_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ASCSEQ_H */
