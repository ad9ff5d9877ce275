#ifndef DIVCODES_H
#define DIVCODES_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Result codes shared by every function in this interface.
 */
typedef enum DcStatus {
  DC_STATUS_OK = 0,
  DC_STATUS_NULL_POINTER = 1,
  DC_STATUS_INVALID_UTF8 = 2,
  DC_STATUS_PARSE_ERROR = 3,
  DC_STATUS_INVALID_PARAMETER = 4,
  DC_STATUS_BUDGET_EXCEEDED = 5,
  DC_STATUS_BUFFER_TOO_SMALL = 6,
  DC_STATUS_INTERNAL = 7,
} DcStatus;

/*
 Opaque handle to a binary linear code.
 */
typedef struct DcCode DcCode;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Parses the matrix text format (`n k` header, then `k` rows of `0`/`1`).

 # Safety
 `text` is a NUL-terminated string; `out` is writable.
 */
enum DcStatus dc_code_from_text(const char *text, struct DcCode **out);

/*
 Builds a catalog family member. `param` is `s` for `flat_plus_affine`
 and `k` for `two_affine` and `three_flats`; it is ignored otherwise.
 `variant` may be null. `r = 0` picks the family's default.

 # Safety
 `family` is a NUL-terminated string, `variant` is null or one, and `out`
 is writable.
 */
enum DcStatus dc_construct(const char *family,
                           uintptr_t r,
                           uintptr_t param,
                           const char *variant,
                           struct DcCode **out);

/*
 Releases a handle. Null is ignored.

 # Safety
 `code` is null or a handle not yet freed.
 */
void dc_code_free(struct DcCode *code);

/*
 Length of the code, 0 for a null handle.

 # Safety
 `code` is null or a live handle.
 */
uintptr_t dc_code_length(const struct DcCode *code);

/*
 Dimension of the code, 0 for a null handle.

 # Safety
 `code` is null or a live handle.
 */
uintptr_t dc_code_dimension(const struct DcCode *code);

/*
 # Safety
 `code` is a live handle; `out` is writable.
 */
enum DcStatus dc_code_is_projective(const struct DcCode *code, bool *out);

/*
 # Safety
 `code` is a live handle; `out` is writable.
 */
enum DcStatus dc_code_is_divisible(const struct DcCode *code, uintptr_t delta, bool *out);

/*
 Writes the `n + 1` weight counts into `counts`, which holds `len`
 entries. Fails with `BufferTooSmall` when `len < n + 1`.

 # Safety
 `code` is a live handle; `counts` points to `len` writable `u64`.
 */
enum DcStatus dc_code_weight_distribution(const struct DcCode *code,
                                          uint64_t *counts,
                                          uintptr_t len);

/*
 Canonical key as a hex string; equivalent codes give equal strings.

 # Safety
 `code` is a live handle; `out` is writable. Free the result with
 [`dc_string_free`].
 */
enum DcStatus dc_code_canonical_key(const struct DcCode *code, char **out);

/*
 Generator matrix in the text format.

 # Safety
 `code` is a live handle; `out` is writable. Free the result with
 [`dc_string_free`].
 */
enum DcStatus dc_code_to_text(const struct DcCode *code, char **out);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` is null or a string from this library not yet freed.
 */
void dc_string_free(char *s);

/*
 Whether the moment LP rules out every projective `delta`-divisible code
 of length `n`.

 # Safety
 `out` is writable.
 */
enum DcStatus dc_exclude_length(uintptr_t n, uintptr_t delta, bool *out);

/*
 Message for the last failed call on this thread, empty after a
 success. Valid until the next call into this library on the same thread.
 */
const char *dc_last_error_message(void);

/*
 Status code as a static string.
 */
const char *dc_status_name(enum DcStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DIVCODES_H */
