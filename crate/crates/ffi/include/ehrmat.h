#ifndef EHRMAT_H
#define EHRMAT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EhrmatFamily {
  EHRMAT_FAMILY_BASES = 0,
  EHRMAT_FAMILY_INDEPENDENCE = 1,
  EHRMAT_FAMILY_POLYMATROID = 2,
} EhrmatFamily;

typedef enum EhrmatStatus {
  EHRMAT_STATUS_OK = 0,
  EHRMAT_STATUS_NULL_POINTER = 1,
  EHRMAT_STATUS_INVALID_UTF8 = 2,
  EHRMAT_STATUS_INVALID_DOCUMENT = 3,
  EHRMAT_STATUS_BUDGET_EXCEEDED = 4,
  EHRMAT_STATUS_COMPUTATION_FAILED = 5,
  EHRMAT_STATUS_OUT_OF_RANGE = 6,
  EHRMAT_STATUS_PANIC = 7,
} EhrmatStatus;

/**
 * The Ehrhart polynomial and h*-vector of a polytope.
 */
typedef struct EhrmatEhrhart EhrmatEhrhart;

/**
 * A validated matroid or polymatroid polytope.
 */
typedef struct EhrmatPolytope EhrmatPolytope;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread, or an empty
 * string. The pointer stays valid until the next ehrmat call on this thread.
 */
const char *ehrmat_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *ehrmat_version(void);

/**
 * Parses and validates a JSON matroid document.
 *
 * # Safety
 * `json` must be null or a valid NUL-terminated string; `out` must be null
 * or valid for writing one pointer.
 */
enum EhrmatStatus ehrmat_polytope_from_json(const char *json, struct EhrmatPolytope **out);

/**
 * The polytope of the uniform matroid of rank `r` on `n` elements.
 *
 * # Safety
 * `out` must be null or valid for writing one pointer.
 */
enum EhrmatStatus ehrmat_polytope_uniform(size_t n,
                                          size_t r,
                                          enum EhrmatFamily family,
                                          struct EhrmatPolytope **out);

/**
 * Releases a polytope handle. Null is ignored.
 *
 * # Safety
 * `p` must be null or a handle from this library that has not been freed.
 */
void ehrmat_polytope_free(struct EhrmatPolytope *p);

/**
 * Computes the Ehrhart polynomial and h*-vector. `max_candidates` bounds
 * vertex enumeration; 0 selects the default budget.
 *
 * # Safety
 * `p` must be null or a live polytope handle; `out` must be null or valid
 * for writing one pointer.
 */
enum EhrmatStatus ehrmat_compute_ehrhart(const struct EhrmatPolytope *p,
                                         uint64_t max_candidates,
                                         struct EhrmatEhrhart **out);

/**
 * Releases a result handle. Null is ignored.
 *
 * # Safety
 * `e` must be null or a handle from this library that has not been freed.
 */
void ehrmat_ehrhart_free(struct EhrmatEhrhart *e);

/**
 * Dimension of the polytope; the polynomial has `dim + 1` coefficients.
 * Returns 0 for a null handle.
 *
 * # Safety
 * `e` must be null or a live result handle.
 */
size_t ehrmat_ehrhart_dim(const struct EhrmatEhrhart *e);

/**
 * Coefficient of `k^i` as a reduced fraction string such as `"107/30"`.
 *
 * # Safety
 * `e` must be null or a live result handle; `out` must be null or valid for
 * writing one pointer.
 */
enum EhrmatStatus ehrmat_ehrhart_coefficient(const struct EhrmatEhrhart *e, size_t i, char **out);

/**
 * Entry `h*_i` as a decimal string.
 *
 * # Safety
 * As for [`ehrmat_ehrhart_coefficient`].
 */
enum EhrmatStatus ehrmat_ehrhart_hstar(const struct EhrmatEhrhart *e, size_t i, char **out);

/**
 * Number of lattice points in the `k`-th dilate, as a decimal string.
 *
 * # Safety
 * As for [`ehrmat_ehrhart_coefficient`].
 */
enum EhrmatStatus ehrmat_ehrhart_count(const struct EhrmatEhrhart *e, int64_t k, char **out);

/**
 * Normalized volume (`dim!` times the leading coefficient) as a decimal
 * string.
 *
 * # Safety
 * As for [`ehrmat_ehrhart_coefficient`].
 */
enum EhrmatStatus ehrmat_ehrhart_normalized_volume(const struct EhrmatEhrhart *e, char **out);

/**
 * 1 if the h*-vector is unimodal, 0 if not, -1 for a null handle.
 *
 * # Safety
 * `e` must be null or a live result handle.
 */
int32_t ehrmat_ehrhart_hstar_unimodal(const struct EhrmatEhrhart *e);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library that has not been freed.
 */
void ehrmat_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EHRMAT_H */
