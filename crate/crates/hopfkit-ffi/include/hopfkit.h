#ifndef HOPFKIT_H
#define HOPFKIT_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define HK_OK 0

/**
 * A mathematical negative: not separable, obstructed, an axiom fails.
 */
#define HK_NEGATIVE 1

/**
 * Malformed input.
 */
#define HK_INPUT 2

#define HK_NULL 3

#define HK_UTF8 4

#define HK_PANIC 5

#define HK_SIDE_RADICAL 0

#define HK_SIDE_CORADICAL 1

#define HK_LEVEL_COMODULE 0

#define HK_LEVEL_BICOMODULE 1

/**
 * A parsed structure file.
 */
typedef struct HkStructure HkStructure;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a structure file from JSON text.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
int32_t hk_structure_from_json(const char *json, struct HkStructure **out);

/**
 * Builds a built-in example. `spec_json` is e.g. `{"name":"taft","n":3,"lambda":"2"}`;
 * `field` is `"q"` or `"fN"`.
 *
 * # Safety
 * Both strings must be NUL-terminated and `out` a valid pointer.
 */
int32_t hk_example(const char *spec_json, const char *field, struct HkStructure **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `h` must come from this library and not be used afterwards.
 */
void hk_structure_free(struct HkStructure *h);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void hk_string_free(char *s);

/**
 * Message of the last failure on this thread; valid until the next call.
 */
const char *hk_last_error(void);

/**
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
int32_t hk_structure_dim(const struct HkStructure *h, size_t *out);

/**
 * Serializes the structure in the canonical file format.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
int32_t hk_structure_to_json(const struct HkStructure *h, char **out);

/**
 * Checks the Hopf algebra axioms; `all_passed` receives 1 or 0.
 *
 * # Safety
 * `h` must be a live handle and `all_passed` a valid pointer.
 */
int32_t hk_validate_hopf(const struct HkStructure *h, int32_t *all_passed);

/**
 * Dimension of the Jacobson radical.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
int32_t hk_radical_dim(const struct HkStructure *h, size_t *out);

/**
 * Dimension of the coradical.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
int32_t hk_coradical_dim(const struct HkStructure *h, size_t *out);

/**
 * Splits along the radical or coradical given by `candidate_json` (a
 * subspace file) and writes the report as JSON. Only the bicomodule level
 * produces a report; the comodule level writes the maps and ledger.
 *
 * # Safety
 * `h` must be a live handle, `candidate_json` NUL-terminated and `out` valid.
 */
int32_t hk_split(const struct HkStructure *h,
                 int32_t side,
                 const char *candidate_json,
                 int32_t level,
                 char **out);

/**
 * Runs a command-line invocation (`argv[0]` is the program name) and
 * captures its output. `exit_code` receives 0, 1 or 2.
 *
 * # Safety
 * `argv` must hold `argc` NUL-terminated strings; the out-pointers must be valid.
 */
int32_t hk_run_command(const char *const *argv, size_t argc, char **output, int32_t *exit_code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPFKIT_H */
