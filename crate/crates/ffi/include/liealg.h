#ifndef LIEALG_H
#define LIEALG_H

/* Generated by cbindgen from the liealg-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every fallible call.
 */
typedef enum LieAlgStatus {
  LIE_ALG_STATUS_OK = 0,
  /**
   * Null pointer, malformed UTF-8, or argument out of range.
   */
  LIE_ALG_STATUS_INVALID_ARGUMENT = 1,
  /**
   * Input text did not parse as an algebra description.
   */
  LIE_ALG_STATUS_PARSE_ERROR = 2,
  /**
   * The table parsed but violates a Lie-algebra axiom.
   */
  LIE_ALG_STATUS_AXIOM_ERROR = 3,
  /**
   * The operation's mathematical precondition failed (e.g. a nonzero
   * center where a centerless algebra is required).
   */
  LIE_ALG_STATUS_PRECONDITION = 4,
  LIE_ALG_STATUS_INTERNAL = 5,
} LieAlgStatus;

/**
 * Opaque algebra handle.
 */
typedef struct LieAlgebraHandle LieAlgebraHandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread. The pointer is
 * valid until the next failing liealg call on the same thread.
 */
const char *liealg_last_error_message(void);

/**
 * Parses the JSON algebra-file format (field, dim, basis, table, optional
 * form), validates the Lie axioms, and returns a handle.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LieAlgStatus liealg_algebra_from_json(const char *json, struct LieAlgebraHandle **out);

/**
 * Builds a named catalog algebra, e.g. "sl:3", "heisenberg", or
 * "sl:2+abelian:1". Pass `prime = 0` for the rationals.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LieAlgStatus liealg_catalog_build(const char *name,
                                       uint64_t prime,
                                       struct LieAlgebraHandle **out);

/**
 * Releases a handle returned by any constructor. Passing NULL is a no-op.
 *
 * # Safety
 * `alg` must be NULL or a pointer previously returned by this library and
 * not yet freed.
 */
void liealg_algebra_free(struct LieAlgebraHandle *alg);

/**
 * Dimension of the algebra; 0 for a NULL handle.
 *
 * # Safety
 * `alg` must be NULL or a live handle.
 */
size_t liealg_algebra_dim(const struct LieAlgebraHandle *alg);

/**
 * Dimension of the center; 0 for a NULL handle.
 *
 * # Safety
 * `alg` must be NULL or a live handle.
 */
size_t liealg_algebra_center_dim(const struct LieAlgebraHandle *alg);

/**
 * Dimension of the derived subalgebra [g, g]; 0 for a NULL handle.
 *
 * # Safety
 * `alg` must be NULL or a live handle.
 */
size_t liealg_algebra_derived_dim(const struct LieAlgebraHandle *alg);

/**
 * Writes the dimensions of Der g and of its inner ideal.
 *
 * # Safety
 * All pointers must be valid; `alg` must be a live handle.
 */
enum LieAlgStatus liealg_algebra_derivation_dims(const struct LieAlgebraHandle *alg,
                                                 size_t *der_dim,
                                                 size_t *inner_dim);

/**
 * True when the algebra is complete: trivial center and every derivation
 * inner.
 *
 * # Safety
 * All pointers must be valid; `alg` must be a live handle.
 */
enum LieAlgStatus liealg_algebra_is_complete(const struct LieAlgebraHandle *alg, bool *out);

/**
 * Runs the full completeness certificate (hypotheses, Der g complete,
 * holomorph biconditional) and returns it as a JSON document.
 *
 * # Safety
 * All pointers must be valid; `alg` must be a live handle.
 */
enum LieAlgStatus liealg_algebra_verify_json(const struct LieAlgebraHandle *alg, char **out_json);

/**
 * Serializes the algebra back to the JSON algebra-file format.
 *
 * # Safety
 * All pointers must be valid; `alg` must be a live handle.
 */
enum LieAlgStatus liealg_algebra_to_json(const struct LieAlgebraHandle *alg, char **out_json);

/**
 * Central-degree lattice of a quantum torus: `exponents` is the row-major
 * n-by-n antisymmetric integer matrix, `order` the multiplicative order of
 * the deformation parameter. Writes a JSON array of basis rows (decimal
 * strings).
 *
 * # Safety
 * `exponents` must point to `n * n` readable values; `out_json` must be a
 * valid pointer.
 */
enum LieAlgStatus liealg_torus_radical_json(size_t n,
                                            uint64_t order,
                                            const int64_t *exponents,
                                            char **out_json);

/**
 * Frees a string returned through a `char **` out-parameter. Passing NULL
 * is a no-op.
 *
 * # Safety
 * `s` must be NULL or a string previously returned by this library and not
 * yet freed.
 */
void liealg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIEALG_H */
