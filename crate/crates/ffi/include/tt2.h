#ifndef TT2_H
#define TT2_H

/* Generated by cbindgen from src/lib.rs. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define TT2_ARTIFACT_SST 0

#define TT2_ARTIFACT_SPINE 1

#define TT2_ARTIFACT_SEGAL 2

typedef enum Tt2Status {
  TT2_STATUS_OK = 0,
  /**
   * The input was processed and produced diagnostics.
   */
  TT2_STATUS_DIAGNOSTICS = 1,
  TT2_STATUS_INVALID_ARGUMENT = 2,
  TT2_STATUS_NOT_FOUND = 3,
  TT2_STATUS_UTF8 = 4,
  TT2_STATUS_PANIC = 5,
} Tt2Status;

/**
 * A checking session with its own signature.
 */
typedef struct Tt2Session Tt2Session;

/**
 * Returns null if `universes` is zero.
 */
struct Tt2Session *tt2_session_new(uint32_t universes, bool collapse_fibrant);

/**
 * # Safety
 * `session` must come from [`tt2_session_new`] and not be used afterwards.
 */
void tt2_session_free(struct Tt2Session *session);

/**
 * Check `source` into the session, labelling diagnostics with `file`.
 *
 * # Safety
 * Pointers must be valid; `session` must be live.
 */
enum Tt2Status tt2_session_check(struct Tt2Session *session, const char *file, const char *source);

/**
 * Total diagnostics so far; zero for a null session.
 *
 * # Safety
 * `session` must be null or live.
 */
size_t tt2_session_diagnostic_count(const struct Tt2Session *session);

/**
 * All diagnostics as a JSON array.
 *
 * # Safety
 * `session` must be live and `out` writable.
 */
enum Tt2Status tt2_session_diagnostics_json(const struct Tt2Session *session, char **out);

/**
 * Normal form of the definition `name`.
 *
 * # Safety
 * Pointers must be valid; `session` must be live.
 */
enum Tt2Status tt2_session_normalize(const struct Tt2Session *session,
                                     const char *name,
                                     char **out);

/**
 * Generate scaffolding; `artifact` is one of the `TT2_ARTIFACT_*` values
 * and `prefix` may be null.
 *
 * # Safety
 * `prefix` must be null or a valid string; `out` must be writable.
 */
enum Tt2Status tt2_generate(uint32_t artifact,
                            size_t levels,
                            bool literal_spine,
                            const char *prefix,
                            char **out);

/**
 * Every strictly monotone map `[k] -> [n]`, one per line.
 *
 * # Safety
 * `out` must be writable.
 */
enum Tt2Status tt2_delta_faces(size_t k, size_t n, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void tt2_string_free(char *s);

/**
 * A static description of `status`.
 */
const char *tt2_status_message(enum Tt2Status status);

#endif  /* TT2_H */
