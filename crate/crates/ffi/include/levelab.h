#ifndef LEVELAB_H
#define LEVELAB_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LevelabStatus {
  LEVELAB_STATUS_OK = 0,
  LEVELAB_STATUS_NULL_POINTER = 1,
  LEVELAB_STATUS_INVALID_ARGUMENT = 2,
  LEVELAB_STATUS_NOT_SYMPLECTIC = 3,
  LEVELAB_STATUS_NOT_IN_SUBGROUP = 4,
  LEVELAB_STATUS_DEGENERATE = 5,
  LEVELAB_STATUS_SIZE_LIMIT = 6,
  LEVELAB_STATUS_BUFFER_TOO_SMALL = 7,
  LEVELAB_STATUS_PANIC = 8,
} LevelabStatus;

/**
 * An endomorphism of the free group `F_{2g}` with a level `d`.
 */
typedef struct LevelabAutomorphism LevelabAutomorphism;

/**
 * A `Z_4` quadratic enhancement.
 */
typedef struct LevelabEnhancement LevelabEnhancement;

/**
 * An element of `Sp(2g; Z)`.
 */
typedef struct LevelabSymp LevelabSymp;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *levelab_status_message(enum LevelabStatus status);

/**
 * Builds a `2g x 2g` symplectic matrix from row-major entries.
 *
 * # Safety
 * `entries` must point to `4 g^2` values; `out` must be writable.
 */
enum LevelabStatus levelab_symp_from_entries(size_t g,
                                             const int64_t *entries,
                                             struct LevelabSymp **out);

/**
 * `T_y^k` for `y` given by `2g` coordinates.
 *
 * # Safety
 * `y` must point to `2g` values; `out` must be writable.
 */
enum LevelabStatus levelab_symp_transvection(size_t g,
                                             const int64_t *y,
                                             int64_t k,
                                             struct LevelabSymp **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum LevelabStatus levelab_symp_mul(const struct LevelabSymp *a,
                                    const struct LevelabSymp *b,
                                    struct LevelabSymp **out);

/**
 * Writes `in_level(a, d)` and, for even `d`, `in_igusa(a, d)` (else false).
 *
 * # Safety
 * `a` must be a live handle; out-pointers must be writable.
 */
enum LevelabStatus levelab_symp_membership(const struct LevelabSymp *a,
                                           uint64_t d,
                                           bool *in_level,
                                           bool *in_igusa);

/**
 * Writes `m(a) mod d` (length `2g^2 + g`) into `buf`.
 *
 * # Safety
 * `a` must be a live handle; `buf` must hold `cap` values; `len` must be writable.
 */
enum LevelabStatus levelab_symp_m_map(const struct LevelabSymp *a,
                                      uint64_t d,
                                      uint64_t *buf,
                                      size_t cap,
                                      size_t *len);

/**
 * # Safety
 * `a` must be null or a handle from this library, freed at most once.
 */
void levelab_symp_free(struct LevelabSymp *a);

/**
 * Builds an enhancement from a `dim x dim` 0/1 pairing (row-major) and basis values.
 *
 * # Safety
 * `pairing` must hold `dim^2` bytes and `values` `dim` values; `out` must be writable.
 */
enum LevelabStatus levelab_enhancement_new(size_t dim,
                                           const uint8_t *pairing,
                                           const int64_t *values,
                                           struct LevelabEnhancement **out);

/**
 * # Safety
 * `e` must be a live handle; `out` must be writable.
 */
enum LevelabStatus levelab_brown_invariant(const struct LevelabEnhancement *e, uint8_t *out);

/**
 * # Safety
 * `e` must be null or a handle from this library, freed at most once.
 */
void levelab_enhancement_free(struct LevelabEnhancement *e);

/**
 * Invariant factors of the `Z_8` group-ring quotient, ascending.
 *
 * # Safety
 * `buf` must hold `cap` values; `len` must be writable.
 */
enum LevelabStatus levelab_quotient_structure(size_t g,
                                              bool closed,
                                              uint64_t *buf,
                                              size_t cap,
                                              size_t *len);

/**
 * Parses `{"g": .., "d": .., "images": [..]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated UTF-8 string; `out` must be writable.
 */
enum LevelabStatus levelab_automorphism_from_json(const char *json,
                                                  struct LevelabAutomorphism **out);

/**
 * Evaluates `tau_d` and reports whether it vanishes and, for odd `d`,
 * whether it lies in `Lambda^3 H` (false for even `d`).
 *
 * # Safety
 * `f` must be a live handle; out-pointers must be writable.
 */
enum LevelabStatus levelab_automorphism_tau(const struct LevelabAutomorphism *f,
                                            bool *is_zero,
                                            bool *in_lambda3_out);

/**
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum LevelabStatus levelab_automorphism_boundary_preserved(const struct LevelabAutomorphism *f,
                                                           bool *out);

/**
 * # Safety
 * `f` must be null or a handle from this library, freed at most once.
 */
void levelab_automorphism_free(struct LevelabAutomorphism *f);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LEVELAB_H */
