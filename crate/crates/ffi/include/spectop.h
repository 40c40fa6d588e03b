#ifndef SPECTOP_H
#define SPECTOP_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Status codes; the non-zero values match the CLI exit codes.
typedef enum SpectopStatus {
  SPECTOP_STATUS_OK = 0,
  // Two independent oracles disagreed.
  SPECTOP_STATUS_ORACLE_DISAGREEMENT = 1,
  // Malformed input or a failed precondition.
  SPECTOP_STATUS_PARSE = 2,
  // The order is not a bounded lattice.
  SPECTOP_STATUS_NOT_A_LATTICE = 3,
  // The point set is empty, unknown or contains the top.
  SPECTOP_STATUS_INVALID_POINTS = 4,
  // The input exceeds a size cap.
  SPECTOP_STATUS_TOO_LARGE = 5,
  // A required pointer argument was null.
  SPECTOP_STATUS_NULL_ARGUMENT = 6,
  // An internal panic was caught at the boundary.
  SPECTOP_STATUS_INTERNAL = 7,
} SpectopStatus;

// A finite lattice with a chosen point set.
typedef struct SpectopLattice SpectopLattice;

// A finite module together with its submodule lattice.
typedef struct SpectopModule SpectopModule;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a module spec such as `"Z: 2,3,5"`. `max_order` of 0 selects the
// default cap.
//
// # Safety
// `spec` must be a NUL-terminated string; `out` must be writable.
enum SpectopStatus spectop_module_parse(const char *spec,
                                        size_t max_order,
                                        struct SpectopModule **out);

// Releases a module. Null is ignored.
//
// # Safety
// `m` must come from [`spectop_module_parse`] and not be used afterwards.
void spectop_module_free(struct SpectopModule *m);

// Number of elements of the module.
//
// # Safety
// `m` must be a live module handle; `out` must be writable.
enum SpectopStatus spectop_module_order(const struct SpectopModule *m, size_t *out);

// Number of submodules, including 0 and the module itself.
//
// # Safety
// `m` must be a live module handle; `out` must be writable.
enum SpectopStatus spectop_module_submodule_count(const struct SpectopModule *m, size_t *out);

// Number of first submodules.
//
// # Safety
// `m` must be a live module handle; `out` must be writable.
enum SpectopStatus spectop_module_spec_first_count(const struct SpectopModule *m, size_t *out);

// Whether the first-submodule spectrum carries a topology.
//
// # Safety
// `m` must be a live module handle; `out` must be writable.
enum SpectopStatus spectop_module_is_topf(const struct SpectopModule *m, bool *out);

// Full JSON report for a module.
//
// # Safety
// `m` must be a live module handle; `out` must be writable. The string
// written to `out` must be released with [`spectop_string_free`].
enum SpectopStatus spectop_module_report_json(const struct SpectopModule *m,
                                              size_t cap,
                                              uint64_t seed,
                                              char **out);

// Builds a lattice context from JSON. `points` is a comma-separated label
// list and may be null when the JSON carries an `"X"` field.
//
// # Safety
// `json` must be NUL-terminated; `points` is null or NUL-terminated; `out`
// must be writable.
enum SpectopStatus spectop_lattice_from_json(const char *json,
                                             const char *points,
                                             struct SpectopLattice **out);

// Releases a lattice. Null is ignored.
//
// # Safety
// `l` must come from [`spectop_lattice_from_json`] and not be used afterwards.
void spectop_lattice_free(struct SpectopLattice *l);

// Whether the lattice is X-top for its point set.
//
// # Safety
// `l` must be a live lattice handle; `out` must be writable.
enum SpectopStatus spectop_lattice_is_x_top(const struct SpectopLattice *l, bool *out);

// Full JSON report for a lattice context.
//
// # Safety
// `l` must be a live lattice handle; `out` must be writable. Release the
// result with [`spectop_string_free`].
enum SpectopStatus spectop_lattice_report_json(const struct SpectopLattice *l,
                                               size_t cap,
                                               uint64_t seed,
                                               char **out);

// JSON report for a ring such as `"Zmod:12"` or `"M2F2"`.
//
// # Safety
// `spec` must be NUL-terminated; `out` must be writable. Release the result
// with [`spectop_string_free`].
enum SpectopStatus spectop_ring_report_json(const char *spec,
                                            size_t cap,
                                            uint64_t seed,
                                            char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void spectop_string_free(char *s);

// Message for the last failure on this thread; empty if none. The pointer
// stays valid until the next failing call on the same thread.
const char *spectop_last_error_message(void);

// Library version as a static string.
const char *spectop_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPECTOP_H */
