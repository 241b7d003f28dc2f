#ifndef COXCARPET_H
#define COXCARPET_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CoxBoundary {
  COX_BOUNDARY_SIERPINSKI_CARPET = 0,
  COX_BOUNDARY_CIRCLE = 1,
  COX_BOUNDARY_SPHERE = 2,
  COX_BOUNDARY_EMPTY = 3,
  COX_BOUNDARY_NOT_CARPET = 4,
  COX_BOUNDARY_OUT_OF_SCOPE = 5,
} CoxBoundary;

typedef enum CoxMode {
  COX_MODE_THEOREM1 = 0,
  COX_MODE_THEOREM2 = 1,
  COX_MODE_CONJECTURAL = 2,
} CoxMode;

typedef enum CoxStatus {
  COX_STATUS_OK = 0,
  COX_STATUS_NULL_POINTER = 1,
  COX_STATUS_INVALID_UTF8 = 2,
  COX_STATUS_PARSE_ERROR = 3,
  COX_STATUS_FAMILY_ERROR = 4,
  COX_STATUS_INVALID_ARGUMENT = 5,
  COX_STATUS_PANIC = 6,
} CoxStatus;

/**
 * A parsed Coxeter system.
 */
typedef struct CoxSystem CoxSystem;

/**
 * The outcome of a classification.
 */
typedef struct CoxVerdict CoxVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call.
 */
const char *cox_last_error(void);

/**
 * Parses a system in the text or JSON document format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CoxStatus cox_system_parse(const char *text, struct CoxSystem **out);

/**
 * A named family; `n < 0` for families without a parameter.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CoxStatus cox_system_family(const char *name, int64_t n, struct CoxSystem **out);

/**
 * Number of generators, or 0 for a null handle.
 *
 * # Safety
 * `sys` must be null or a live handle.
 */
size_t cox_system_rank(const struct CoxSystem *sys);

/**
 * # Safety
 * `sys` must be null or a handle not yet freed.
 */
void cox_system_free(struct CoxSystem *sys);

/**
 * Classifies the boundary. `THEOREM1` requires a right-angled system.
 *
 * # Safety
 * `sys` must be a live handle and `out` a valid pointer.
 */
enum CoxStatus cox_classify(const struct CoxSystem *sys,
                            enum CoxMode mode,
                            struct CoxVerdict **out);

/**
 * Writes the boundary type of `v` to `out`.
 *
 * # Safety
 * `v` must be null or a live handle and `out` a valid pointer.
 */
enum CoxStatus cox_verdict_boundary(const struct CoxVerdict *v, enum CoxBoundary *out);

/**
 * True iff the verdict skipped the hyperbolicity hypothesis.
 *
 * # Safety
 * `v` must be null or a live handle.
 */
bool cox_verdict_is_conjectural(const struct CoxVerdict *v);

/**
 * The JSON report, or null for a null handle. Free with
 * [`cox_string_free`].
 *
 * # Safety
 * `v` must be null or a live handle.
 */
char *cox_verdict_json(const struct CoxVerdict *v);

/**
 * # Safety
 * `v` must be null or a handle not yet freed.
 */
void cox_verdict_free(struct CoxVerdict *v);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void cox_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COXCARPET_H */
