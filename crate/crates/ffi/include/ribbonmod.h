#ifndef RIBBONMOD_H
#define RIBBONMOD_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RmFamily {
  RM_FAMILY_A = 0,
  RM_FAMILY_B = 1,
  RM_FAMILY_D = 2,
} RmFamily;

typedef enum RmMethod {
  RM_METHOD_NAIVE = 0,
  RM_METHOD_THEOREM = 1,
  RM_METHOD_CLOSED = 2,
  RM_METHOD_AUTO = 3,
} RmMethod;

/**
 * Outcome of a call. `RM_STATUS_OK` is zero.
 */
typedef enum RmStatus {
  RM_STATUS_OK = 0,
  RM_STATUS_INVALID_ARGUMENT = 1,
  RM_STATUS_NOT_PRIME = 2,
  RM_STATUS_CAPACITY = 3,
  RM_STATUS_INVALID_COMPOSITION = 4,
  RM_STATUS_UNKNOWN_GROUP = 5,
  RM_STATUS_NO_CLOSED_FORM = 6,
  RM_STATUS_NULL_POINTER = 7,
  RM_STATUS_PANIC = 8,
} RmStatus;

/**
 * Residue counts of one p-vector. Opaque to C.
 */
typedef struct RmVector RmVector;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Exact ribbon number of the (pseudo)composition `parts[0..len]` as a
 * decimal string in `*out`.
 *
 * # Safety
 * `parts` must hold `len` values and `out` must be writable.
 */
enum RmStatus rm_ribbon(enum RmFamily fam, const uint64_t *parts_ptr, size_t len, char **out);

/**
 * Ribbon number of `parts[0..len]` reduced mod the prime `p`.
 *
 * # Safety
 * `parts` must hold `len` values and `out` must be writable.
 */
enum RmStatus rm_ribbon_mod(enum RmFamily fam,
                            const uint64_t *parts_ptr,
                            size_t len,
                            uint64_t p,
                            uint64_t *out);

/**
 * Residue counts of all ribbon numbers of rank `n` mod `p`.
 *
 * # Safety
 * `out` must be writable. The handle written there is freed with
 * [`rm_vector_free`].
 */
enum RmStatus rm_cvec(enum RmFamily fam,
                      uint64_t n,
                      uint64_t p,
                      enum RmMethod how,
                      struct RmVector **out);

/**
 * Ribbon number of a built-in Coxeter group (`"E6"`, `"I2(5)"`, ...) for
 * the descent set given by the generator bitmask `mask`.
 *
 * # Safety
 * `group` must be a NUL-terminated string and `out` writable.
 */
enum RmStatus rm_coxeter_ribbon(const char *group, uint64_t mask, char **out);

/**
 * Residue histogram of a built-in Coxeter group's descent classes mod `p`.
 * Writes `min(p, capacity)` counts into `counts`; `*len` receives `p`.
 *
 * # Safety
 * `group` must be a NUL-terminated string, `counts` must hold `capacity`
 * values and `len` must be writable.
 */
enum RmStatus rm_coxeter_histogram(const char *group,
                                   uint64_t p,
                                   uint64_t *counts,
                                   size_t capacity,
                                   size_t *len);

/**
 * Number of irreducible characters of the symmetric group of degree `n`
 * whose degree is prime to `p`, as a decimal string.
 *
 * # Safety
 * `out` must be writable.
 */
enum RmStatus rm_macdonald(uint64_t n, uint64_t p, char **out);

/**
 * Number of residues in the vector, which is `p`. Zero for null.
 *
 * # Safety
 * `v` must be null or a live handle.
 */
size_t rm_vector_len(const struct RmVector *v);

/**
 * Count of residue `i` as a decimal string.
 *
 * # Safety
 * `v` must be null or a live handle; `out` must be writable.
 */
enum RmStatus rm_vector_count(const struct RmVector *v, size_t i, char **out);

/**
 * Count of residue `i` when it fits in 64 bits, else `RmStatus::Capacity`.
 *
 * # Safety
 * `v` must be null or a live handle; `out` must be writable.
 */
enum RmStatus rm_vector_count_u64(const struct RmVector *v, size_t i, uint64_t *out);

/**
 * Which route produced the vector, e.g. `"closed-form (n = m p^d)"`.
 * Borrowed from the handle; null for a null handle.
 *
 * # Safety
 * `v` must be null or a live handle.
 */
const char *rm_vector_method(const struct RmVector *v);

/**
 * # Safety
 * `v` must be null or a handle from [`rm_cvec`] not yet freed.
 */
void rm_vector_free(struct RmVector *v);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void rm_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null after a
 * success. Valid until the next call on the same thread.
 */
const char *rm_last_error_message(void);

/**
 * Library version, static.
 */
const char *rm_version(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* RIBBONMOD_H */
