#ifndef CWFOREST_H
#define CWFOREST_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum CwStatus {
  CW_STATUS_OK = 0,
  /**
   * A verification run completed and found a counterexample witness.
   */
  CW_STATUS_WITNESS = 1,
  /**
   * Malformed input: unparsable rational, zero parameter, bad index.
   */
  CW_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A resource cap (depth, height, word length) was breached.
   */
  CW_STATUS_RESOURCE_CAP = 3,
  /**
   * A required pointer argument was null.
   */
  CW_STATUS_NULL_POINTER = 4,
} CwStatus;

/**
 * Opaque handle to a reduced positive rational.
 */
typedef struct CwRational CwRational;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses "a/b" or "a" into a new rational handle.
 */
enum CwStatus cw_rational_parse(const char *text, struct CwRational **out);

/**
 * Builds the reduced form of n/d. Rejects zero on either side.
 */
enum CwStatus cw_rational_new(uint64_t n, uint64_t d, struct CwRational **out);

/**
 * Renders "a/b", or plain "a" for integers. Free with cw_string_free.
 */
enum CwStatus cw_rational_to_string(const struct CwRational *q, char **out);

void cw_rational_free(struct CwRational *q);

void cw_string_free(char *s);

/**
 * Left and right children of w in the (u,v) forest.
 */
enum CwStatus cw_children(uint64_t u,
                          uint64_t v,
                          const struct CwRational *w,
                          struct CwRational **left,
                          struct CwRational **right);

/**
 * Writes 1 to `out` if q lies in the closed orphan interval [1/u, v].
 */
enum CwStatus cw_is_orphan(uint64_t u, uint64_t v, const struct CwRational *q, int32_t *out);

/**
 * Parent of q and the side it hangs on ('L' or 'R'). For an orphan,
 * writes null to `parent` and 0 to `letter`.
 */
enum CwStatus cw_parent(uint64_t u,
                        uint64_t v,
                        const struct CwRational *q,
                        struct CwRational **parent,
                        char *letter);

/**
 * Decomposes q into its orphan root, root-to-q path word, and row number.
 * The path is returned as a string over 'L'/'R'; free it with
 * cw_string_free.
 */
enum CwStatus cw_locate(uint64_t u,
                        uint64_t v,
                        const struct CwRational *q,
                        struct CwRational **root,
                        char **path,
                        uint32_t *row);

/**
 * Descends from `root` along a path word such as "RLR".
 */
enum CwStatus cw_descend(uint64_t u,
                         uint64_t v,
                         const struct CwRational *root,
                         const char *path,
                         struct CwRational **out);

/**
 * Renders row n of the (u,v) tree at `root` as a space-separated string.
 */
enum CwStatus cw_row(uint64_t u, uint64_t v, const struct CwRational *root, uint32_t n, char **out);

/**
 * Newman successor 1/(2*floor(q) + 1 - q).
 */
enum CwStatus cw_newman_successor(const struct CwRational *q, struct CwRational **out);

/**
 * Continued fraction of q as "[a0,a1,...,ak]". Free with cw_string_free.
 */
enum CwStatus cw_continued_fraction(const struct CwRational *q, char **out);

/**
 * Checks the symmetry identity up to `depth`; writes the JSON report.
 */
enum CwStatus cw_verify_symmetry(uint64_t u,
                                 uint64_t v,
                                 const struct CwRational *root,
                                 uint32_t depth,
                                 char **report);

/**
 * Decompose-and-replay sweep over heights up to `height_bound`.
 */
enum CwStatus cw_verify_partition(uint64_t u, uint64_t v, uint64_t height_bound, char **report);

/**
 * Child-range inequalities over heights up to `height_bound`.
 */
enum CwStatus cw_verify_range(uint64_t u, uint64_t v, uint64_t height_bound, char **report);

/**
 * Bounded freeness certificate over words of length up to `maxlen`.
 */
enum CwStatus cw_verify_freeness(uint64_t u, uint64_t v, uintptr_t maxlen, char **report);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CWFOREST_H */
