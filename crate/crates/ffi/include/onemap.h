#ifndef ONEMAP_H
#define ONEMAP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Values accepted by the `algorithm` argument of the compute functions.
 */
typedef enum OnemapAlgorithm {
  ONEMAP_ALGORITHM_AUTO = 0,
  ONEMAP_ALGORITHM_NLOGN = 1,
  ONEMAP_ALGORITHM_LARGE_M = 2,
  ONEMAP_ALGORITHM_NAIVE = 3,
} OnemapAlgorithm;

typedef enum OnemapStatus {
  ONEMAP_STATUS_OK = 0,
  ONEMAP_STATUS_NULL_POINTER = 1,
  ONEMAP_STATUS_EMPTY_TEXT = 2,
  ONEMAP_STATUS_BAD_WINDOW_LENGTH = 3,
  ONEMAP_STATUS_INPUT_TOO_LARGE = 4,
  ONEMAP_STATUS_INVALID_ARGUMENT = 5,
  ONEMAP_STATUS_OUT_OF_RANGE = 6,
  ONEMAP_STATUS_INTERNAL = 7,
} OnemapStatus;

/**
 * Per-window counts of one computation.
 */
typedef struct OnemapProfile OnemapProfile;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Computes the profile of a byte string for window length `m`.
 *
 * # Safety
 * `text` must point to `len` readable bytes and `out` to writable storage
 * for one pointer. On failure `*out` is set to null.
 */
enum OnemapStatus onemap_compute(const uint8_t *text,
                                 uintptr_t len,
                                 uintptr_t m,
                                 uint32_t algorithm,
                                 struct OnemapProfile **out);

/**
 * Like [`onemap_compute`] over arbitrary 64-bit symbols.
 *
 * # Safety
 * `symbols` must point to `len` readable values; `out` as in
 * [`onemap_compute`].
 */
enum OnemapStatus onemap_compute_symbols(const uint64_t *symbols,
                                         uintptr_t len,
                                         uintptr_t m,
                                         uint32_t algorithm,
                                         struct OnemapProfile **out);

/**
 * Number of windows, `n - m + 1`. Zero for a null profile.
 *
 * # Safety
 * `profile` must be null or a live profile.
 */
uintptr_t onemap_profile_len(const struct OnemapProfile *profile);

/**
 * Windows equal to the window at `position`, itself included.
 *
 * # Safety
 * `profile` must be null or live; `out` null or writable.
 */
enum OnemapStatus onemap_profile_exact(const struct OnemapProfile *profile,
                                       uintptr_t position,
                                       uint64_t *out);

/**
 * Windows at Hamming distance exactly one.
 *
 * # Safety
 * As [`onemap_profile_exact`].
 */
enum OnemapStatus onemap_profile_one_mismatch(const struct OnemapProfile *profile,
                                              uintptr_t position,
                                              uint64_t *out);

/**
 * Windows at Hamming distance at most one.
 *
 * # Safety
 * As [`onemap_profile_exact`].
 */
enum OnemapStatus onemap_profile_total(const struct OnemapProfile *profile,
                                       uintptr_t position,
                                       uint64_t *out);

/**
 * Copies all `<= 1` totals into `buf`, which must hold at least
 * [`onemap_profile_len`] values.
 *
 * # Safety
 * `buf` must point to `cap` writable values.
 */
enum OnemapStatus onemap_profile_copy_totals(const struct OnemapProfile *profile,
                                             uint64_t *buf,
                                             uintptr_t cap);

/**
 * Releases a profile. Null is ignored.
 *
 * # Safety
 * `profile` must come from a compute function and not be freed twice.
 */
void onemap_profile_free(struct OnemapProfile *profile);

/**
 * Static, NUL-terminated description of a status code.
 */
const char *onemap_status_message(enum OnemapStatus status);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* ONEMAP_H */
