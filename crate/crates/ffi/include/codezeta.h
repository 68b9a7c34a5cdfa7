#ifndef CODEZETA_H
#define CODEZETA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every function.
typedef enum CzStatus {
  CZ_STATUS_OK = 0,
  // The computation ran but a mathematical check failed; the report is
  // still written.
  CZ_STATUS_CHECK_FAILED = 1,
  CZ_STATUS_NULL_POINTER = 2,
  CZ_STATUS_INVALID_UTF8 = 3,
  CZ_STATUS_PARSE = 4,
  CZ_STATUS_INVALID_ARGUMENT = 5,
  CZ_STATUS_CAPACITY = 6,
  CZ_STATUS_INFEASIBLE = 7,
  CZ_STATUS_NUMERICAL = 8,
  CZ_STATUS_IO = 9,
  CZ_STATUS_PANIC = 10,
} CzStatus;

// Opaque handle to a parsed linear code.
typedef struct CzCode CzCode;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a code in the text format (`q n k` header, then `k` rows).
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum CzStatus cz_code_parse(const char *text, struct CzCode **out);

// Releases a handle from [`cz_code_parse`]. Null is ignored.
//
// # Safety
// `code` must come from [`cz_code_parse`] and not be used afterwards.
void cz_code_free(struct CzCode *code);

// Field size, length and dimension of a code.
//
// # Safety
// `code` must be a live handle; the out pointers must be writable.
enum CzStatus cz_code_params(const struct CzCode *code, uint32_t *q, size_t *n, size_t *k);

// Runs one report command (`weights`, `zeta`, `rankgen`, `greene`,
// `twovar`, `bounds`, `clifford`, `report`) and writes its JSON to `out`.
//
// Returns `CZ_STATUS_CHECK_FAILED` with the report written when a check
// fails.
//
// # Safety
// `code` must be a live handle, `command` a NUL-terminated string, `out`
// writable. Free the result with [`cz_string_free`].
enum CzStatus cz_code_report_json(const struct CzCode *code, const char *command, char **out);

// Clifford check with an explicit mode: every subset when `exhaustive` is
// nonzero, otherwise `count` subsets drawn with `seed`.
//
// # Safety
// As for [`cz_code_report_json`].
enum CzStatus cz_code_clifford_json(const struct CzCode *code,
                                    bool exhaustive,
                                    uint64_t count,
                                    uint64_t seed,
                                    char **out);

// Extremal self-dual enumerator for `(q, c, n)` as JSON.
//
// # Safety
// `out` must be writable. Free the result with [`cz_string_free`].
enum CzStatus cz_extremal_json(uint32_t q, size_t c, size_t n, bool ultraspherical, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void cz_string_free(char *s);

// Message for the last failed call on this thread, or null. Valid until
// the next call on the same thread.
const char *cz_last_error(void);

// Library version as a static string.
const char *cz_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CODEZETA_H */
