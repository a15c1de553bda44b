#ifndef LEVISOM_H
#define LEVISOM_H

/* Generated by cbindgen from the levisom-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum LevStatus {
  LEV_STATUS_OK = 0,
  /**
   * A parameter was out of range or inconsistent.
   */
  LEV_STATUS_INVALID_ARGUMENT = 1,
  /**
   * A word, rational, language or graph failed to parse.
   */
  LEV_STATUS_PARSE_ERROR = 2,
  /**
   * The request exceeds a size limit of the library.
   */
  LEV_STATUS_CAPABILITY_EXCEEDED = 3,
  /**
   * A required pointer argument was NULL.
   */
  LEV_STATUS_NULL_POINTER = 4,
  /**
   * A string argument was not valid UTF-8.
   */
  LEV_STATUS_INVALID_UTF8 = 5,
  /**
   * An unexpected internal failure.
   */
  LEV_STATUS_INTERNAL = 6,
} LevStatus;

/**
 * Opaque handle to a permutation group.
 */
typedef struct LevGroup LevGroup;

/**
 * Opaque handle to a finite language.
 */
typedef struct LevLanguage LevLanguage;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread, or NULL.
 * The pointer stays valid until the next library call on the same thread.
 */
const char *lev_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *lev_version(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be NULL or a pointer obtained from this library, not yet freed.
 */
void lev_string_free(char *s);

/**
 * Exact distance between two words, written as a rational string.
 * Weights are rational strings such as `"1"` or `"3/2"`; the empty word
 * is `"<eps>"`.
 *
 * # Safety
 * String arguments must be NUL-terminated; `out` must be writable.
 */
enum LevStatus lev_distance(const char *u,
                            const char *v,
                            const char *gamma,
                            const char *theta,
                            char **out);

/**
 * Distance with integer-fraction weights, returned as a double.
 *
 * # Safety
 * String arguments must be NUL-terminated; `out` must be writable.
 */
enum LevStatus lev_distance_f64(const char *u,
                                const char *v,
                                int64_t gamma_num,
                                int64_t gamma_den,
                                int64_t theta_num,
                                int64_t theta_den,
                                double *out);

/**
 * Parses a language in the line-per-word text format.
 *
 * # Safety
 * `text` must be NUL-terminated; `out` must be writable.
 */
enum LevStatus lev_language_parse(const char *text, struct LevLanguage **out);

/**
 * Builds the stretched encoding of a bundled cubic graph (`"k4"`,
 * `"k33"`, `"petersen"`, `"frucht"`).
 *
 * # Safety
 * `graph` must be NUL-terminated; `out` must be writable.
 */
enum LevStatus lev_construct_graph_language(const char *graph, struct LevLanguage **out);

/**
 * Builds the layered single-marker language with `depth` layers.
 *
 * # Safety
 * `out` must be writable.
 */
enum LevStatus lev_construct_marker_layers(size_t depth, struct LevLanguage **out);

/**
 * Builds `{0^i, 1^i : i <= n}`.
 *
 * # Safety
 * `out` must be writable.
 */
enum LevStatus lev_construct_two_unary(size_t n, struct LevLanguage **out);

/**
 * Number of words, or 0 for a NULL handle.
 *
 * # Safety
 * `lang` must be NULL or a live handle.
 */
size_t lev_language_len(const struct LevLanguage *lang);

/**
 * The `index`-th word as a new string.
 *
 * # Safety
 * `lang` must be a live handle; `out` must be writable.
 */
enum LevStatus lev_language_word(const struct LevLanguage *lang, size_t index, char **out);

/**
 * Releases a language handle.
 *
 * # Safety
 * `lang` must be NULL or a handle from this library, not yet freed.
 */
void lev_language_free(struct LevLanguage *lang);

/**
 * Isometry group of a language under the given weights.
 *
 * # Safety
 * `lang` must be a live handle; strings NUL-terminated; `out` writable.
 */
enum LevStatus lev_isometry_group(const struct LevLanguage *lang,
                                  const char *gamma,
                                  const char *theta,
                                  struct LevGroup **out);

/**
 * Degree of the group, or 0 for a NULL handle.
 *
 * # Safety
 * `group` must be NULL or a live handle.
 */
size_t lev_group_degree(const struct LevGroup *group);

/**
 * Group order as a decimal string (orders may exceed 64 bits).
 *
 * # Safety
 * `group` must be a live handle; `out` must be writable.
 */
enum LevStatus lev_group_order(const struct LevGroup *group, char **out);

/**
 * JSON summary: degree, order, generators, orbit sizes.
 *
 * # Safety
 * `group` must be a live handle; `out` must be writable.
 */
enum LevStatus lev_group_json(const struct LevGroup *group, char **out);

/**
 * Releases a group handle.
 *
 * # Safety
 * `group` must be NULL or a handle from this library, not yet freed.
 */
void lev_group_free(struct LevGroup *group);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LEVISOM_H */
