#ifndef PROP_REWRITER_H
#define PROP_REWRITER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define PR_ALGEBRA_MAG 0

#define PR_ALGEBRA_SIMP 1

#define PR_ALGEBRA_BRAID 2

#define PR_ALGEBRA_SYM 3

#define PR_ALGEBRA_SYMMAG 4

#define PR_ALGEBRA_SYMSIMP 5

#define PR_ALGEBRA_LEIB 6

#define PR_ALGEBRA_LEIBOP 7

#define PR_ALGEBRA_FREE 8

#define PR_SIDE_LEIB 0

#define PR_SIDE_LEIBOP 1

/**
 * Result codes.
 */
enum PrStatus
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : int32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  PR_STATUS_OK = 0,
  PR_STATUS_NULL_POINTER = 1,
  PR_STATUS_INVALID_UTF8 = 2,
  PR_STATUS_PARSE_ERROR = 3,
  PR_STATUS_INVALID_ARGUMENT = 4,
  PR_STATUS_NO_CANONICAL_FORM = 5,
  PR_STATUS_BOUND_EXCEEDED = 6,
  PR_STATUS_ENGINE_ERROR = 7,
  PR_STATUS_PANIC = 8,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum PrStatus PrStatus;
#else
typedef int32_t PrStatus;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

/**
 * Opaque handle to an element.
 */
typedef struct PrElement PrElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses `text` in the expression grammar into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
PrStatus pr_element_parse(const char *text, struct PrElement **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `x` must come from this library and not be used afterwards.
 */
void pr_element_free(struct PrElement *x);

/**
 * Prints an element in the expression grammar.
 *
 * # Safety
 * `x` must be a live handle; `out` must be writable.
 */
PrStatus pr_element_to_string(const struct PrElement *x, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void pr_string_free(char *s);

/**
 * Writes the normal form of `x` in `algebra` (a `PR_ALGEBRA_*` code) to
 * a new handle.
 *
 * # Safety
 * `x` must be a live handle; `out` must be writable.
 */
PrStatus pr_normalize(const struct PrElement *x, uint32_t algebra_code, struct PrElement **out);

/**
 * Decides `x = y` in `algebra`.
 *
 * # Safety
 * `x` and `y` must be live handles; `out` must be writable.
 */
PrStatus pr_equal(const struct PrElement *x,
                  const struct PrElement *y,
                  uint32_t algebra_code,
                  bool *out);

/**
 * Dimension of Leib (`PR_SIDE_LEIB`) or Leib^op (`PR_SIDE_LEIBOP`) from
 * level `n` to level `t`, by exact row reduction. Fails with
 * `BoundExceeded` when `t > max_target`.
 *
 * # Safety
 * `out` must be writable.
 */
PrStatus pr_quotient_dimension(uint32_t side, size_t n, size_t t, size_t max_target, size_t *out);

/**
 * Runs the named suite. A negative `max_level` selects the suite's
 * default bound. Writes the JSON report and the aggregate verdict.
 *
 * # Safety
 * `suite` must be a NUL-terminated string; `json_out` and `passed` must be
 * writable.
 */
PrStatus pr_verify(const char *suite, int64_t max_level, char **json_out, bool *passed);

/**
 * The message of the last failure on this thread, or an empty string.
 * Valid until the next failing call on the same thread.
 */
const char *pr_last_error(void);

/**
 * Library version, a static string.
 */
const char *pr_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PROP_REWRITER_H */
