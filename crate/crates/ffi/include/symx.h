#ifndef SYMX_H
#define SYMX_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum SymxStatus {
  SYMX_STATUS_OK = 0,
  SYMX_STATUS_NULL_POINTER = 1,
  SYMX_STATUS_INVALID_UTF8 = 2,
  SYMX_STATUS_PARSE_ERROR = 3,
  SYMX_STATUS_INVALID_DATUM = 4,
  SYMX_STATUS_TYPE_MISMATCH = 5,
  SYMX_STATUS_INVALID_ARGUMENT = 6,
  SYMX_STATUS_PANIC = 7,
} SymxStatus;

/**
 * Extension type of a map over `S^3`: whether the surface map and the
 * extension preserve orientation.
 */
typedef enum SymxExtType {
  SYMX_EXT_TYPE_PP = 0,
  SYMX_EXT_TYPE_MM = 1,
  SYMX_EXT_TYPE_PM = 2,
  SYMX_EXT_TYPE_MP = 3,
} SymxExtType;

/**
 * Answer of a query that can be left open.
 */
typedef enum SymxTristate {
  SYMX_TRISTATE_YES = 1,
  SYMX_TRISTATE_UNKNOWN = 2,
} SymxTristate;

/**
 * Opaque periodic-map datum.
 */
typedef struct SymxDatum SymxDatum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or an empty string.
 * The pointer stays valid until the next call into the library.
 */
const char *symx_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *symx_version(void);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void symx_string_free(char *s);

/**
 * Parses a datum from JSON with keys `n`, `orientable`, `h`, `handles`,
 * `boundary`, `cones`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` writable.
 */
enum SymxStatus symx_datum_from_json(const char *json, struct SymxDatum **out);

/**
 * Builds a datum from arrays. Shape is checked here; validity is reported
 * by [`symx_datum_validate`].
 *
 * # Safety
 * Each array pointer must address `*_len` readable values (or be null with
 * length 0) and `out` must be writable.
 */
enum SymxStatus symx_datum_new(uint64_t n,
                               bool orientable,
                               uint32_t h,
                               const uint64_t *handles,
                               size_t handles_len,
                               const uint64_t *boundary,
                               size_t boundary_len,
                               const uint64_t *cones,
                               size_t cones_len,
                               struct SymxDatum **out);

/**
 * Releases a datum. Null is ignored.
 *
 * # Safety
 * `d` must come from this library and not have been freed.
 */
void symx_datum_free(struct SymxDatum *d);

/**
 * Writes whether the datum satisfies the validity contract. When it does
 * not, the violations are available through [`symx_last_error`].
 *
 * # Safety
 * `d` must be a live handle and `valid` writable.
 */
enum SymxStatus symx_datum_validate(const struct SymxDatum *d, bool *valid);

/**
 * Genus of the surface the map acts on.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum SymxStatus symx_datum_genus(const struct SymxDatum *d, uint64_t *out);

/**
 * Conjugacy invariant as JSON.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum SymxStatus symx_datum_invariant_json(const struct SymxDatum *d, char **out);

/**
 * Whether two maps are conjugate.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum SymxStatus symx_are_conjugate(const struct SymxDatum *a, const struct SymxDatum *b, bool *out);

/**
 * Whether the cyclic groups generated by two maps are conjugate.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum SymxStatus symx_same_cyclic_group(const struct SymxDatum *a,
                                       const struct SymxDatum *b,
                                       bool *out);

/**
 * Runs one type's criterion. Asking for a type whose surface orientation
 * behaviour does not match the map gives [`SymxStatus::TypeMismatch`].
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum SymxStatus symx_check(const struct SymxDatum *d, enum SymxExtType kind, bool *out);

/**
 * Bit mask of the types the map extends in: bit `k` is set for
 * `SymxExtType` value `k`.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum SymxStatus symx_classify(const struct SymxDatum *d, uint32_t *out);

/**
 * Verdicts with witnesses for both candidate types, as a JSON array.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum SymxStatus symx_verdicts_json(const struct SymxDatum *d, char **out);

/**
 * Table of extendable classes at genus `g` as a JSON array of rows.
 * `max_order == 0` selects the default order bound, which exists only for
 * `g >= 2`.
 *
 * # Safety
 * `out` must be writable.
 */
enum SymxStatus symx_enumerate_json(uint64_t g,
                                    enum SymxExtType kind,
                                    uint64_t max_order,
                                    char **out);

/**
 * Whether `L(l1, m1)` and `L(l2, m2)` are homeomorphic.
 *
 * # Safety
 * `out` must be writable.
 */
enum SymxStatus symx_lens_homeomorphic(uint64_t l1, int64_t m1, uint64_t l2, int64_t m2, bool *out);

/**
 * Whether `L(l, m)` contains a one-sided projective plane.
 *
 * # Safety
 * `out` must be writable.
 */
enum SymxStatus symx_lens_admits_projective_plane(uint64_t l, int64_t m, bool *out);

/**
 * Whether `L(l, m)` contains a one-sided Klein bottle.
 *
 * # Safety
 * `out` must be writable.
 */
enum SymxStatus symx_lens_admits_klein_bottle(uint64_t l, int64_t m, bool *out);

/**
 * Whether `L(l, m)` contains a one-sided closed surface of genus 3.
 *
 * # Safety
 * `out` must be writable.
 */
enum SymxStatus symx_lens_admits_genus3(uint64_t l, int64_t m, enum SymxTristate *out);

/**
 * Image in `H_1(L(l, m))` of the torsion class of a one-sided surface.
 * Fails for odd `l`.
 *
 * # Safety
 * `out` must be writable.
 */
enum SymxStatus symx_lens_torsion_image(uint64_t l, int64_t m, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SYMX_H */
