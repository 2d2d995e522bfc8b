#ifndef CAYLEY_H
#define CAYLEY_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result code of every fallible call.
 */
typedef enum {
  CAYLEY_STATUS_OK = 0,
  CAYLEY_STATUS_NULL_POINTER = 1,
  CAYLEY_STATUS_DOMAIN = 2,
  CAYLEY_STATUS_ORACLE_LIMIT = 3,
  CAYLEY_STATUS_INVARIANT = 4,
  CAYLEY_STATUS_PANIC = 5,
} CayleyStatus;

/**
 * Verification suites, mirroring `cayley verify <suite>`.
 */
typedef enum {
  CAYLEY_SUITE_CLOSED_FORM = 0,
  CAYLEY_SUITE_EDGE_SYMMETRY = 1,
  CAYLEY_SUITE_ORACLE = 2,
  CAYLEY_SUITE_SPLIT = 3,
  CAYLEY_SUITE_SERIES = 4,
} CayleySuite;

/**
 * Identities that [`cayley_series_residual`] can check.
 */
typedef enum {
  /**
   * `T^2` against the recurrence-weighted sum; needs a table.
   */
  CAYLEY_RESIDUAL_SQUARE = 0,
  /**
   * `T T' = T' - T/S`.
   */
  CAYLEY_RESIDUAL_ODE = 1,
  /**
   * `T = log(T/S)`.
   */
  CAYLEY_RESIDUAL_LOG_FORM = 2,
  /**
   * `T = S exp(T)`.
   */
  CAYLEY_RESIDUAL_FUNCTIONAL_EQUATION = 3,
} CayleyResidual;

/**
 * Opaque truncated power series with exact rational coefficients.
 */
typedef struct CayleySeries CayleySeries;

/**
 * Opaque memoized table of tree counts.
 */
typedef struct CayleyTable CayleyTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until the
 * next call into this library from the same thread.
 */
const char *cayley_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void cayley_string_free(char *s);

/**
 * Creates a table filled through `max_n` (>= 1).
 *
 * # Safety
 * `out` must be valid for writes.
 */
CayleyStatus cayley_table_new(uint64_t max_n, CayleyTable **out);

/**
 * # Safety
 * `table` must come from [`cayley_table_new`] and not be used afterwards.
 */
void cayley_table_free(CayleyTable *table);

/**
 * # Safety
 * `table` must be a live handle and `out` valid for writes.
 */
CayleyStatus cayley_table_max_n(const CayleyTable *table, uint64_t *out);

/**
 * `T_n` from the recurrence, extending the table as needed.
 *
 * # Safety
 * `table` must be a live handle and `out` valid for writes.
 */
CayleyStatus cayley_tree_count(CayleyTable *table, uint64_t n, char **out);

/**
 * `n^(n-2)` (1 at n = 1).
 *
 * # Safety
 * `out` must be valid for writes.
 */
CayleyStatus cayley_tree_count_closed(uint64_t n, char **out);

/**
 * Number of trees containing the edge `{1, 2}` (n >= 2).
 *
 * # Safety
 * `table` must be a live handle and `out` valid for writes.
 */
CayleyStatus cayley_edge_rooted_count(CayleyTable *table, uint64_t n, char **out);

/**
 * Checks `n * E_n = 2 * T_n`.
 *
 * # Safety
 * `table` must be a live handle and `passed` valid for writes.
 */
CayleyStatus cayley_verify_edge_symmetry(CayleyTable *table, uint64_t n, bool *passed);

/**
 * `C(n, k)`, zero when `k > n`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
CayleyStatus cayley_binomial(uint64_t n, uint64_t k, char **out);

/**
 * Brute-force count of labeled trees on `n` vertices (1 <= n <= 8).
 *
 * # Safety
 * `out` must be valid for writes.
 */
CayleyStatus cayley_oracle_tree_count(uint32_t n, uint64_t *out);

/**
 * Brute-force count of trees on `n` vertices containing `{u, v}`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
CayleyStatus cayley_oracle_trees_with_edge(uint32_t n, uint32_t u, uint32_t v, uint64_t *out);

/**
 * Runs a verification suite up to `bound`; `all_passed` receives the verdict.
 *
 * # Safety
 * `all_passed` must be valid for writes.
 */
CayleyStatus cayley_verify(CayleySuite suite, uint64_t bound, bool *all_passed);

/**
 * Generating function `sum T_n S^n / (n-1)!` through `order`.
 *
 * # Safety
 * `table` must be a live handle covering `order`; `out` valid for writes.
 */
CayleyStatus cayley_series_tree_egf(const CayleyTable *table, size_t order, CayleySeries **out);

/**
 * Solution of `T = S exp(T)` through `order` by Lagrange inversion.
 *
 * # Safety
 * `out` must be valid for writes.
 */
CayleyStatus cayley_series_lagrange_exp(size_t order, CayleySeries **out);

/**
 * Builds a series from `len` coefficients given as `"p/q"` or `"p"` strings.
 *
 * # Safety
 * `coeffs` must point to `len` valid NUL-terminated strings; `out` valid for writes.
 */
CayleyStatus cayley_series_from_strings(const char *const *coeffs, size_t len, CayleySeries **out);

/**
 * # Safety
 * `series` must come from this library and not be used afterwards.
 */
void cayley_series_free(CayleySeries *series);

/**
 * # Safety
 * `series` must be a live handle and `out` valid for writes.
 */
CayleyStatus cayley_series_order(const CayleySeries *series, size_t *out);

/**
 * Coefficient of `S^power` as `"p/q"`.
 *
 * # Safety
 * `series` must be a live handle and `out` valid for writes.
 */
CayleyStatus cayley_series_coeff(const CayleySeries *series, size_t power, char **out);

/**
 * Checks one identity on `series`; `is_zero` is true when its residual
 * vanishes. `table` is only read for [`CayleyResidual::Square`] and may be
 * NULL otherwise.
 *
 * # Safety
 * Handles must be live (or NULL where allowed) and `is_zero` valid for writes.
 */
CayleyStatus cayley_series_residual(const CayleySeries *series,
                                    const CayleyTable *table,
                                    CayleyResidual kind,
                                    bool *is_zero);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CAYLEY_H */
