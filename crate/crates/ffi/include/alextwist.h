#ifndef ALEXTWIST_H
#define ALEXTWIST_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  AT_STATUS_OK = 0,
  /**
   * Malformed or out-of-range input.
   */
  AT_STATUS_INPUT_ERROR = 1,
  /**
   * An exactness or identity check failed inside the engine.
   */
  AT_STATUS_IDENTITY_FAILURE = 2,
  AT_STATUS_NULL_POINTER = 3,
  AT_STATUS_INVALID_UTF8 = 4,
  /**
   * A Rust panic was caught at the boundary.
   */
  AT_STATUS_PANIC = 5,
} AtStatus;

/**
 * Exponent variable used when rendering.
 */
typedef enum {
  AT_VARIABLE_Q = 0,
  AT_VARIABLE_T = 1,
} AtVariable;

/**
 * Opaque Laurent polynomial in `q`.
 */
typedef struct AtPoly AtPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Alexander polynomial of the closure of `braid` on `n` strands.
 *
 * # Safety
 * `braid` must be a valid C string and `out` writable.
 */
AtStatus at_alexander(uintptr_t n, const char *braid, AtPoly **out);

/**
 * Alexander polynomial of the closure of `braid · τ^m` computed through the
 * twist expansion over the first `n` family members.
 *
 * # Safety
 * `braid` must be a valid C string and `out` writable.
 */
AtStatus at_twist_formula(uintptr_t n, const char *braid, uintptr_t m, AtPoly **out);

/**
 * Coefficient of the `j`-th family member in the expansion of the `m`-th.
 *
 * # Safety
 * `out` must be writable.
 */
AtStatus at_twist_coeff(uintptr_t m, uintptr_t j, uintptr_t n, AtPoly **out);

/**
 * Closed form for the torus knot or link `T(n, l)`.
 *
 * # Safety
 * `out` must be writable.
 */
AtStatus at_torus_closed_form(uintptr_t n, uintptr_t l, AtPoly **out);

/**
 * Human-readable rendering, e.g. `t^-1 - 1 + t`.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
AtStatus at_poly_to_text(const AtPoly *p, AtVariable var, char **out);

/**
 * JSON object mapping exponent labels to decimal coefficients.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
AtStatus at_poly_to_json(const AtPoly *p, AtVariable var, char **out);

/**
 * Decimal coefficient of `q^q_exponent`. Coefficients are arbitrary
 * precision, hence the string.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
AtStatus at_poly_coeff(const AtPoly *p, int64_t q_exponent, char **out);

/**
 * Number of nonzero terms.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
AtStatus at_poly_term_count(const AtPoly *p, uintptr_t *out);

/**
 * Writes 1 to `out` if the polynomials are equal, 0 otherwise.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
AtStatus at_poly_equal(const AtPoly *a, const AtPoly *b, int32_t *out);

/**
 * # Safety
 * `p` must be null or a handle from this library not yet freed.
 */
void at_poly_free(AtPoly *p);

/**
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void at_string_free(char *s);

/**
 * Message of the last failure on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *at_last_error(void);

/**
 * Library version as a static C string.
 */
const char *at_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ALEXTWIST_H */
