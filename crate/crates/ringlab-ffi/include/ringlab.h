#ifndef RINGLAB_H
#define RINGLAB_H

/* Generated by cbindgen from the ringlab-ffi crate. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum RinglabStatus {
  RINGLAB_STATUS_OK = 0,
  RINGLAB_STATUS_NULL_ARGUMENT = 1,
  RINGLAB_STATUS_INVALID_UTF8 = 2,
  RINGLAB_STATUS_PARSE_ERROR = 3,
  RINGLAB_STATUS_VALIDATION_FAILED = 4,
  RINGLAB_STATUS_LIMIT_EXCEEDED = 5,
  RINGLAB_STATUS_UNKNOWN_NAME = 6,
  RINGLAB_STATUS_CONSTRUCTION_ERROR = 7,
  RINGLAB_STATUS_INTERNAL_PANIC = 8,
} RinglabStatus;

// Opaque handle to a validated finite ring.
typedef struct RinglabRing RinglabRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent failure on this thread. The pointer is
// valid until the next ringlab call on the same thread.
const char *ringlab_last_error_message(void);

// Parses RINGSPEC text and validates the ring laws.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer. On
// success `*out` owns a ring that must be released with
// [`ringlab_ring_free`].
enum RinglabStatus ringlab_ring_parse(const char *text, struct RinglabRing **out);

// Releases a ring handle. A null pointer is ignored.
//
// # Safety
// `ring` must have come from this library and not been freed already.
void ringlab_ring_free(struct RinglabRing *ring);

// Number of elements.
//
// # Safety
// `ring` must be a live handle; `out` must be valid.
enum RinglabStatus ringlab_ring_order(const struct RinglabRing *ring, uint64_t *out);

// Ring name as a fresh string.
//
// # Safety
// `ring` must be a live handle; `out` receives an owned string.
enum RinglabStatus ringlab_ring_name(const struct RinglabRing *ring, char **out);

// Canonical RINGSPEC serialization.
//
// # Safety
// `ring` must be a live handle; `out` receives an owned string.
enum RinglabStatus ringlab_ring_serialize(const struct RinglabRing *ring, char **out);

// Jacobson radical as element-set text (`kind:` header plus one element per
// line).
//
// # Safety
// `ring` must be a live handle; `out` receives an owned string.
enum RinglabStatus ringlab_ring_radical(const struct RinglabRing *ring, char **out);

// Evaluates a named predicate. `out_holds` receives 0 or 1; when the
// predicate fails and `out_witness` is non-null it receives the witness
// elements as text.
//
// # Safety
// `ring` must be a live handle, `name` NUL-terminated, `out_holds` valid;
// `out_witness` may be null.
enum RinglabStatus ringlab_ring_predicate(const struct RinglabRing *ring,
                                          const char *name,
                                          int32_t *out_holds,
                                          char **out_witness);

// Builds an extension of the ring. `spec` is one of `matrix:N`, `tri:N`,
// `scalarupper:N`, `powerseries:K` (identity twist), or `trivext`.
//
// # Safety
// `ring` must be a live handle, `spec` NUL-terminated, `out` valid; `*out`
// must be released with [`ringlab_ring_free`].
enum RinglabStatus ringlab_ring_construct(const struct RinglabRing *ring,
                                          const char *spec,
                                          struct RinglabRing **out);

// Replays catalogued checks over a corpus directory of `.ring` files and
// returns the rendered report. `check_id` may name a single check or be
// `"all"`. `out_failures` (optional) receives the number of FAIL rows.
//
// # Safety
// `corpus_dir` and `check_id` must be NUL-terminated strings; `out_report`
// must be valid and receives an owned string; `out_failures` may be null.
enum RinglabStatus ringlab_verify(const char *corpus_dir,
                                  const char *check_id,
                                  uint64_t seed,
                                  uint32_t samples,
                                  char **out_report,
                                  uint64_t *out_failures);

// Releases a string produced by this library. A null pointer is ignored.
//
// # Safety
// `s` must have come from this library and not been freed already.
void ringlab_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RINGLAB_H */
