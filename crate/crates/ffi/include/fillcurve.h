#ifndef FILLCURVE_H
#define FILLCURVE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum FcStatus {
  FC_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  FC_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  FC_STATUS_INVALID_UTF8 = 2,
  /**
   * Polynomial or field text could not be parsed.
   */
  FC_STATUS_PARSE = 3,
  /**
   * Field parameters or operands were rejected.
   */
  FC_STATUS_INVALID_ARGUMENT = 4,
  /**
   * The polynomial does not vanish on every rational point.
   */
  FC_STATUS_NOT_FILLING = 5,
  /**
   * The work estimate exceeded the configured budget.
   */
  FC_STATUS_INFEASIBLE = 6,
  /**
   * A Rust panic was caught at the boundary.
   */
  FC_STATUS_INTERNAL = 7,
} FcStatus;

/**
 * Outcome of the smoothness certificate.
 */
typedef enum FcVerdict {
  FC_VERDICT_SMOOTH = 0,
  FC_VERDICT_SINGULAR = 1,
  FC_VERDICT_INCONCLUSIVE = 2,
} FcVerdict;

/**
 * A finite field. Create with [`fc_field_new`] or [`fc_field_parse`].
 */
typedef struct FcField FcField;

/**
 * A bihomogeneous polynomial over an [`FcField`].
 */
typedef struct FcPoly FcPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copy of the last error message on this thread, or null if none.
 * Release it with [`fc_string_free`].
 */
char *fc_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library that has not been
 * freed yet.
 */
void fc_string_free(char *s);

/**
 * `GF(q)` with its canonical modulus.
 *
 * # Safety
 * `out` must be valid for writing one pointer.
 */
enum FcStatus fc_field_new(uint64_t q, struct FcField **out);

/**
 * A field from its text form, e.g. `"p=3,e=2,mod=[1,0,1]"`.
 *
 * # Safety
 * `spec` must be a nul-terminated string and `out` valid for writing.
 */
enum FcStatus fc_field_parse(const char *spec, struct FcField **out);

/**
 * # Safety
 * `field` must be null or a handle from this library not yet freed.
 */
void fc_field_free(struct FcField *field);

/**
 * Number of elements, or 0 when it does not fit in 64 bits.
 *
 * # Safety
 * `field` must be null or a live handle.
 */
uint64_t fc_field_order(const struct FcField *field);

/**
 * Parses polynomial text over `field`.
 *
 * # Safety
 * `field` must be a live handle, `src` a nul-terminated string and `out`
 * valid for writing.
 */
enum FcStatus fc_poly_parse(const struct FcField *field, const char *src, struct FcPoly **out);

/**
 * # Safety
 * `poly` must be null or a handle from this library not yet freed.
 */
void fc_poly_free(struct FcPoly *poly);

/**
 * Canonical text of `poly`, or null if `poly` is null. Release with
 * [`fc_string_free`].
 *
 * # Safety
 * `poly` must be null or a live handle.
 */
char *fc_poly_to_string(const struct FcPoly *poly);

/**
 * # Safety
 * `poly` must be a live handle; `a` and `b` must be valid for writing.
 */
enum FcStatus fc_poly_bidegree(const struct FcPoly *poly, size_t *a, size_t *b);

/**
 * The minimal filling curve for `q`; `transposed` swaps the factors.
 *
 * # Safety
 * `out` must be valid for writing one pointer.
 */
enum FcStatus fc_construct(uint64_t q, bool transposed, struct FcPoly **out);

/**
 * # Safety
 * `poly` must be a live handle and `out` valid for writing.
 */
enum FcStatus fc_is_filling(const struct FcPoly *poly, bool *out);

/**
 * Zeros on `P1 x P1` over the degree-`ext` extension.
 *
 * # Safety
 * `poly` must be a live handle and `out` valid for writing.
 */
enum FcStatus fc_count_points(const struct FcPoly *poly, size_t ext, uint64_t *out);

/**
 * # Safety
 * `poly` must be a live handle and `out` valid for writing.
 */
enum FcStatus fc_certify_smooth(const struct FcPoly *poly, enum FcVerdict *out);

/**
 * # Safety
 * `poly` must be a live handle and `out` valid for writing.
 */
enum FcStatus fc_is_abs_irreducible(const struct FcPoly *poly, bool *out);

/**
 * Writes `poly = f*K_X + g*K_Y`; both outputs are new handles.
 *
 * # Safety
 * `poly` must be a live handle; `f` and `g` must be valid for writing.
 */
enum FcStatus fc_decompose(const struct FcPoly *poly, struct FcPoly **f, struct FcPoly **g);

/**
 * Largest possible number of rational points on a nondegenerate
 * irreducible curve of degree `d` in `P^r` over `GF(q)`.
 *
 * # Safety
 * `out` must be valid for writing.
 */
enum FcStatus fc_point_bound(uint64_t q, uint32_t r, uint64_t d, uint64_t *out);

/**
 * Census of bi-degree `(a, b)` over `field` as a JSON document. Release
 * the string with [`fc_string_free`].
 *
 * # Safety
 * `field` must be a live handle and `out` valid for writing.
 */
enum FcStatus fc_census_json(const struct FcField *field,
                             size_t a,
                             size_t b,
                             size_t jobs,
                             char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FILLCURVE_H */
