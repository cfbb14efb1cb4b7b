#ifndef GKIT_H
#define GKIT_H

/* Generated by cbindgen from gkit-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes shared by every fallible entry point.
typedef enum GkitStatus {
  GKIT_STATUS_OK = 0,
  GKIT_STATUS_NULL_POINTER = 1,
  GKIT_STATUS_INVALID_UTF8 = 2,
  GKIT_STATUS_INVALID_ARGUMENT = 3,
} GkitStatus;

// Verdict of an elimination test.
typedef enum GkitVerdict {
  GKIT_VERDICT_ELIMINATED = 0,
  GKIT_VERDICT_PASS = 1,
  GKIT_VERDICT_UNKNOWN = 2,
} GkitVerdict;

// Opaque handle to a candidate Hilbert function.
typedef struct GkitCandidate GkitCandidate;

// Opaque handle to a binomial expansion.
typedef struct GkitExpansion GkitExpansion;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent failure on this thread, or NULL.
// The pointer stays valid until the next failing call on the thread.
const char *gkit_last_error(void);

// Library version as a static string; do not free.
const char *gkit_version(void);

// Releases a string returned by this library.
//
// # Safety
// `s` must be a pointer previously returned by a gkit function, not yet
// freed, or NULL.
void gkit_string_free(char *s);

// Computes the unique binomial expansion of a nonnegative decimal integer
// in the given degree.
//
// # Safety
// `value_decimal` must be a NUL-terminated string and `out` a valid
// pointer; on success `*out` owns a handle to free with
// [`gkit_expansion_free`].
enum GkitStatus gkit_expand(const char *value_decimal, uint32_t degree, struct GkitExpansion **out);

// Releases an expansion handle.
//
// # Safety
// `e` must come from [`gkit_expand`] and not be freed twice; NULL is a
// no-op.
void gkit_expansion_free(struct GkitExpansion *e);

// Renders an expansion as `C(a,b)+C(c,d)+...` (or `0`).
//
// # Safety
// `e` must be a live expansion handle; `out` must be valid and receives an
// owned string.
enum GkitStatus gkit_expansion_to_string(const struct GkitExpansion *e, char **out);

// Evaluates the shifted expansion (adding `top_shift` to every top and
// `bottom_shift` to every bottom, vanishing convention included) and
// returns the decimal value.
//
// # Safety
// `e` must be a live expansion handle; `out` must be valid and receives an
// owned string.
enum GkitStatus gkit_expansion_shift(const struct GkitExpansion *e,
                                     int64_t top_shift,
                                     int64_t bottom_shift,
                                     char **out);

// Maximal next entry of an O-sequence after value `h` in degree `d`.
//
// # Safety
// `h` must be a NUL-terminated decimal string; `out` receives an owned
// string.
enum GkitStatus gkit_macaulay_bound(const char *h, uint32_t d, char **out);

// Generic-linear-section bound for value `h` in degree `d`.
//
// # Safety
// As for [`gkit_macaulay_bound`].
enum GkitStatus gkit_green_bound(const char *h, uint32_t d, char **out);

// Persistent growth value `((h)_(d))^s_s`.
//
// # Safety
// As for [`gkit_macaulay_bound`].
enum GkitStatus gkit_gotzmann_growth(const char *h, uint32_t d, uint32_t s, char **out);

// Parses a comma- or space-separated candidate Hilbert function.
//
// # Safety
// `text` must be NUL-terminated; on success `*out` owns a handle to free
// with [`gkit_candidate_free`].
enum GkitStatus gkit_candidate_parse(const char *text, struct GkitCandidate **out);

// Releases a candidate handle.
//
// # Safety
// `c` must come from a gkit constructor and not be freed twice; NULL is a
// no-op.
void gkit_candidate_free(struct GkitCandidate *c);

// Renders a candidate as comma-separated entries.
//
// # Safety
// `c` must be a live candidate handle; `out` receives an owned string.
enum GkitStatus gkit_candidate_to_string(const struct GkitCandidate *c, char **out);

// Macaulay growth condition in every degree.
//
// # Safety
// `c` must be a live candidate handle and `out` a valid pointer.
enum GkitStatus gkit_candidate_is_o_sequence(const struct GkitCandidate *c, bool *out);

// Symmetric Gorenstein shape (necessary conditions only).
//
// # Safety
// As for [`gkit_candidate_is_o_sequence`].
enum GkitStatus gkit_candidate_is_gorenstein_shape(const struct GkitCandidate *c, bool *out);

// Strict decrease through the first half of the sequence.
//
// # Safety
// As for [`gkit_candidate_is_o_sequence`].
enum GkitStatus gkit_candidate_is_totally_nonunimodal(const struct GkitCandidate *c, bool *out);

// Full Perazzo Hilbert function of type `m`, socle degree `d`, extended by
// `extend` power-sum variables (0 for the plain function).
//
// # Safety
// `out` must be valid; on success it owns a candidate handle.
enum GkitStatus gkit_perazzo_hilbert_function(uint32_t m,
                                              uint32_t d,
                                              uint64_t extend,
                                              struct GkitCandidate **out);

// Socle-degree-4 closed-form test on `(1, r, h, r, 1)`; requires `h <= r`.
// `out_certificate_json` may be NULL when the certificate is not wanted.
//
// # Safety
// `r` and `h` must be NUL-terminated decimal strings; non-NULL out
// pointers must be valid; a returned JSON string is owned by the caller.
enum GkitStatus gkit_gors_test(const char *r,
                               const char *h,
                               enum GkitVerdict *out_verdict,
                               char **out_certificate_json);

// Socle-degree-5 closed-form test on `(1, r, h, h, r, 1)`; requires
// `h <= r`.
//
// # Safety
// As for [`gkit_gors_test`].
enum GkitStatus gkit_gorf_test(const char *r,
                               const char *h,
                               enum GkitVerdict *out_verdict,
                               char **out_certificate_json);

// Branch-and-prune section elimination on a symmetric candidate.
// Sound-only: `ELIMINATED` certificates replay; `PASS`/`UNKNOWN` make no
// existence claim.
//
// # Safety
// `c` must be a live candidate handle; out pointers as for
// [`gkit_gors_test`].
enum GkitStatus gkit_section_eliminate(const struct GkitCandidate *c,
                                       uint32_t max_depth,
                                       uint64_t branch_cap,
                                       enum GkitVerdict *out_verdict,
                                       char **out_certificate_json);

// Ledger rows for `delta(r)` over an inclusive codimension range, rendered
// as CSV with columns `r,lower,upper,status,provenance`.
//
// # Safety
// `out` must be valid and receives an owned string.
enum GkitStatus gkit_delta_csv(uint32_t degree, uint64_t lo, uint64_t hi, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GKIT_H */
