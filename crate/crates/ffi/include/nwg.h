#ifndef NWG_H
#define NWG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. The first four agree with the exit codes of the `nwg` tool.
 */
typedef enum NwgStatus {
  NWG_STATUS_OK = 0,
  NWG_STATUS_INPUT_ERROR = 2,
  NWG_STATUS_EMPTY_VARIETY = 3,
  NWG_STATUS_CONTRADICTION = 4,
  NWG_STATUS_NULL_POINTER = 10,
  NWG_STATUS_INVALID_UTF8 = 11,
  NWG_STATUS_PANIC = 12,
} NwgStatus;

/**
 * The outcome of one computation.
 */
typedef struct NwgResult NwgResult;

/**
 * A validated framed quiver.
 */
typedef struct NwgSetting NwgSetting;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Owned by the library; valid
 * until the next call on this thread.
 */
const char *nwg_last_error(void);

/**
 * Library version as a static string.
 */
const char *nwg_version(void);

/**
 * Parses an instance in the JSON file format.
 *
 * # Safety
 * `json` must be null or a nul-terminated string; `out` must be null or writable.
 */
enum NwgStatus nwg_setting_from_json(const char *json, struct NwgSetting **out);

/**
 * Builds a setting from raw arrays on `n` vertices named `a0, a1, ...`.
 *
 * `loops`, `v` and `w` have length `n`; `edges` is the symmetric `n * n` edge-count
 * matrix in row-major order with a zero diagonal.
 *
 * # Safety
 * Each array pointer must be valid for reads of the stated length; `out` must be writable.
 */
enum NwgStatus nwg_setting_from_arrays(size_t n,
                                       const uint32_t *loops,
                                       const uint32_t *edges,
                                       const int64_t *v,
                                       const int64_t *w,
                                       struct NwgSetting **out);

/**
 * Releases a setting. Null is ignored.
 *
 * # Safety
 * `setting` must be null or a handle from this library not yet freed.
 */
void nwg_setting_free(struct NwgSetting *setting);

/**
 * Computes the Namikawa-Weyl group of a setting.
 *
 * # Safety
 * `setting` must be a live handle; `out` must be writable.
 */
enum NwgStatus nwg_compute(const struct NwgSetting *setting, struct NwgResult **out);

/**
 * Number of irreducible factors; 0 for the trivial group or a null handle.
 *
 * # Safety
 * `result` must be null or a live handle.
 */
size_t nwg_result_factor_count(const struct NwgResult *result);

/**
 * Cartan type of factor `index`, such as `"B2"`, or null when out of range.
 *
 * # Safety
 * `result` must be null or a live handle.
 */
const char *nwg_result_factor_type(const struct NwgResult *result, size_t index);

/**
 * Rank of factor `index`, or 0 when out of range.
 *
 * # Safety
 * `result` must be null or a live handle.
 */
uint32_t nwg_result_factor_rank(const struct NwgResult *result, size_t index);

/**
 * Number of codimension-2 roots found.
 *
 * # Safety
 * `result` must be null or a live handle.
 */
size_t nwg_result_codim2_count(const struct NwgResult *result);

/**
 * Group label such as `"A2 x A1"`, `"1"` when trivial.
 *
 * # Safety
 * `result` must be null or a live handle.
 */
const char *nwg_result_label(const struct NwgResult *result);

/**
 * Group order in decimal.
 *
 * # Safety
 * `result` must be null or a live handle.
 */
const char *nwg_result_order(const struct NwgResult *result);

/**
 * The full compute report as JSON, as printed by `nwg compute --format json`.
 *
 * # Safety
 * `result` must be null or a live handle.
 */
const char *nwg_result_json(const struct NwgResult *result);

/**
 * Releases a result. Null is ignored.
 *
 * # Safety
 * `result` must be null or a handle from this library not yet freed.
 */
void nwg_result_free(struct NwgResult *result);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NWG_H */
