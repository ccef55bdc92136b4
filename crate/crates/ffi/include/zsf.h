#ifndef ZSF_H
#define ZSF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ZsfPolyMethod {
  ZSF_POLY_METHOD_AUTO = 0,
  ZSF_POLY_METHOD_WHITNEY = 1,
  ZSF_POLY_METHOD_INTERPOLATE = 2,
} ZsfPolyMethod;

typedef enum ZsfStatus {
  ZSF_STATUS_OK = 0,
  ZSF_STATUS_INVALID_ARGUMENT = 1,
  ZSF_STATUS_NULL_POINTER = 2,
  /**
   * A tuple, state or interpolation budget was exceeded.
   */
  ZSF_STATUS_RESOURCE_REFUSED = 3,
  /**
   * The requested cell is not in the table.
   */
  ZSF_STATUS_NOT_FOUND = 4,
  ZSF_STATUS_INTERNAL = 5,
} ZsfStatus;

/**
 * Opaque characteristic polynomial.
 */
typedef struct ZsfCharPoly ZsfCharPoly;

/**
 * Opaque table of `α_n^d` and `β_n^d`.
 */
typedef struct ZsfCountTable ZsfCountTable;

/**
 * Resource limits; see [`zsf_config_default`].
 */
typedef struct ZsfConfig {
  uint64_t tuple_budget;
  uint64_t state_cap;
} ZsfConfig;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *zsf_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be NULL or a pointer obtained from this library, freed once.
 */
void zsf_string_free(char *s);

struct ZsfConfig zsf_config_default(void);

/**
 * `α_n^d` as a decimal string. `cfg` may be NULL for the defaults.
 *
 * # Safety
 * `cfg` must be NULL or valid; `out` must be a valid pointer.
 */
enum ZsfStatus zsf_alpha(uint64_t n, uint64_t d, const struct ZsfConfig *cfg, char **out);

/**
 * `β_n^d` as a decimal string. `cfg` may be NULL for the defaults.
 *
 * # Safety
 * `cfg` must be NULL or valid; `out` must be a valid pointer.
 */
enum ZsfStatus zsf_beta(uint64_t n, uint64_t d, const struct ZsfConfig *cfg, char **out);

/**
 * Euler's totient.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum ZsfStatus zsf_euler_phi(uint64_t n, uint64_t *out);

/**
 * Whether `α_n^d = f_d(n)` is guaranteed for this `n`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum ZsfStatus zsf_is_admissible(uint64_t n, uint32_t d, bool *out);

/**
 * Number of nonzero vectors in `Z_p^len` all of whose support subsets have
 * nonzero sum, as a decimal string.
 *
 * # Safety
 * `cfg` must be NULL or valid; `out` must be a valid pointer.
 */
enum ZsfStatus zsf_mathieu_zhao_count(uint64_t p,
                                      uint64_t len,
                                      const struct ZsfConfig *cfg,
                                      char **out);

/**
 * Builds `f_d`.
 *
 * # Safety
 * `cfg` must be NULL or valid; `out` must be a valid pointer.
 */
enum ZsfStatus zsf_char_poly_new(uint32_t d,
                                 enum ZsfPolyMethod method,
                                 const struct ZsfConfig *cfg,
                                 struct ZsfCharPoly **out);

/**
 * # Safety
 * `poly` must be NULL or a handle from [`zsf_char_poly_new`], freed once.
 */
void zsf_char_poly_free(struct ZsfCharPoly *poly);

/**
 * Degree of the polynomial, or 0 for a NULL handle.
 *
 * # Safety
 * `poly` must be NULL or a live handle.
 */
uint32_t zsf_char_poly_degree(const struct ZsfCharPoly *poly);

/**
 * Coefficient of `x^power` as a decimal string.
 *
 * # Safety
 * `poly` must be a live handle; `out` must be a valid pointer.
 */
enum ZsfStatus zsf_char_poly_coefficient(const struct ZsfCharPoly *poly,
                                         uint32_t power,
                                         char **out);

/**
 * `f_d(n)` as a decimal string (may be negative).
 *
 * # Safety
 * `poly` must be a live handle; `out` must be a valid pointer.
 */
enum ZsfStatus zsf_char_poly_evaluate(const struct ZsfCharPoly *poly, uint64_t n, char **out);

/**
 * The polynomial written out, e.g. `x^2 - 3x + 2`.
 *
 * # Safety
 * `poly` must be a live handle; `out` must be a valid pointer.
 */
enum ZsfStatus zsf_char_poly_to_string(const struct ZsfCharPoly *poly, char **out);

/**
 * Computes every cell `2 <= n <= n_max`, `1 <= d <= min(n - 1, d_max)`;
 * `d_max = 0` means no limit. Cells refused by the budgets are left out and
 * report `ZSF_STATUS_NOT_FOUND` on lookup.
 *
 * # Safety
 * `cfg` must be NULL or valid; `out` must be a valid pointer.
 */
enum ZsfStatus zsf_count_table_new(uint64_t n_max,
                                   uint64_t d_max,
                                   const struct ZsfConfig *cfg,
                                   struct ZsfCountTable **out);

/**
 * # Safety
 * `table` must be NULL or a handle from [`zsf_count_table_new`], freed once.
 */
void zsf_count_table_free(struct ZsfCountTable *table);

/**
 * # Safety
 * `table` must be a live handle; `out` must be a valid pointer.
 */
enum ZsfStatus zsf_count_table_alpha(const struct ZsfCountTable *table,
                                     uint64_t n,
                                     uint64_t d,
                                     char **out);

/**
 * # Safety
 * `table` must be a live handle; `out` must be a valid pointer.
 */
enum ZsfStatus zsf_count_table_beta(const struct ZsfCountTable *table,
                                    uint64_t n,
                                    uint64_t d,
                                    char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* ZSF_H */
