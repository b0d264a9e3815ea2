#ifndef BIJECTION_ATLAS_H
#define BIJECTION_ATLAS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. Values are stable across releases.
 */
typedef enum BaStatus {
  BA_STATUS_OK = 0,
  BA_STATUS_NULL_ARGUMENT = 1,
  BA_STATUS_INVALID_UTF8 = 2,
  BA_STATUS_PARSE = 3,
  BA_STATUS_INVALID = 4,
  BA_STATUS_UNKNOWN = 5,
  BA_STATUS_NOT_BI_INCREASING = 6,
  BA_STATUS_DOMAIN = 7,
  BA_STATUS_OUT_OF_RANGE = 8,
  BA_STATUS_CAP_EXCEEDED = 9,
  BA_STATUS_PANIC = 10,
} BaStatus;

/**
 * Opaque permutation handle.
 */
typedef struct BaPermutation BaPermutation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null after a success.
 * The pointer stays valid until the next call into this library on the same thread.
 */
const char *ba_last_error(void);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and must not be freed twice.
 */
void ba_string_free(char *s);

/**
 * Parses whitespace-separated 1-based values, e.g. `"2 3 1"`.
 *
 * # Safety
 * `word` must be a NUL-terminated string; `out` must be writable.
 */
enum BaStatus ba_perm_parse(const char *word, struct BaPermutation **out);

/**
 * Builds a permutation from `len` 1-based values.
 *
 * # Safety
 * `values` must point to `len` readable elements (may be null when `len` is 0).
 */
enum BaStatus ba_perm_from_values(const size_t *values, size_t len, struct BaPermutation **out);

/**
 * # Safety
 * `p` must be a handle from this library or null.
 */
void ba_perm_free(struct BaPermutation *p);

/**
 * Length of the permutation; 0 for a null handle.
 *
 * # Safety
 * `p` must be a live handle or null.
 */
size_t ba_perm_len(const struct BaPermutation *p);

/**
 * Copies up to `cap` values into `buf`. `out_len` receives the full length,
 * so a call with `cap` 0 queries the size.
 *
 * # Safety
 * `buf` must have room for `cap` elements; `out_len` must be writable.
 */
enum BaStatus ba_perm_values(const struct BaPermutation *p,
                             size_t *buf,
                             size_t cap,
                             size_t *out_len);

/**
 * Space-separated word.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum BaStatus ba_perm_to_string(const struct BaPermutation *p, char **out);

/**
 * A named statistic: exc, des, inv, maj, dexc, ddes, den, fix, gexc.
 *
 * # Safety
 * `p` must be a live handle; `name` NUL-terminated; `out` writable.
 */
enum BaStatus ba_perm_stat(const struct BaPermutation *p, const char *name, size_t *out);

/**
 * # Safety
 * `p` must be a live handle; `out` writable.
 */
enum BaStatus ba_perm_is_bi_increasing(const struct BaPermutation *p, bool *out);

/**
 * Descriptive JSON record with every statistic of the permutation.
 *
 * # Safety
 * `p` must be a live handle; `out` writable.
 */
enum BaStatus ba_perm_stats_json(const struct BaPermutation *p, char **out);

/**
 * The exc- and fix-preserving involution on bi-increasing permutations.
 *
 * # Safety
 * `p` must be a live handle; `out` writable.
 */
enum BaStatus ba_perm_psi(const struct BaPermutation *p, struct BaPermutation **out);

/**
 * # Safety
 * `p` must be a live handle; `out` writable.
 */
enum BaStatus ba_perm_hat(const struct BaPermutation *p, struct BaPermutation **out);

/**
 * Foata's first fundamental transformation.
 *
 * # Safety
 * `p` must be a live handle; `out` writable.
 */
enum BaStatus ba_perm_foata(const struct BaPermutation *p, struct BaPermutation **out);

/**
 * # Safety
 * `p` must be a live handle; `out` writable.
 */
enum BaStatus ba_perm_foata_inverse(const struct BaPermutation *p, struct BaPermutation **out);

/**
 * Size of the equivalence class of a bi-increasing permutation, as a decimal string.
 *
 * # Safety
 * `p` must be a live handle; `out` writable.
 */
enum BaStatus ba_perm_class_size(const struct BaPermutation *p, char **out);

/**
 * Catalan number C_n as a decimal string.
 *
 * # Safety
 * `out` must be writable.
 */
enum BaStatus ba_catalan(uint64_t n, char **out);

/**
 * Converts `payload` of kind `from` to kind `to`. `route` may be null for the
 * default route. The result is the target payload text.
 *
 * # Safety
 * String arguments must be NUL-terminated (route may be null); `out` writable.
 */
enum BaStatus ba_convert(const char *from,
                         const char *payload,
                         const char *to,
                         const char *route,
                         char **out);

/**
 * JSON description of any object kind.
 *
 * # Safety
 * String arguments must be NUL-terminated; `out` writable.
 */
enum BaStatus ba_describe_json(const char *kind, const char *payload, char **out);

/**
 * Exact distribution of one or two comma-separated statistics over family
 * `S` or `B` of size `n`, as JSON.
 *
 * # Safety
 * String arguments must be NUL-terminated; `out` writable.
 */
enum BaStatus ba_distribution_json(const char *family,
                                   size_t n,
                                   const char *stats,
                                   size_t jobs,
                                   bool force,
                                   char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BIJECTION_ATLAS_H */
