/*
 * C interface to the copartition laboratory.
 *
 * Every function that can fail returns a copart_status; COPART_OK is 0.
 * On failure, copart_last_error() returns a human-readable message for
 * the current thread, valid until the next failing call. Handles and
 * strings returned through out-parameters are owned by the caller and
 * must be released with the matching *_free function.
 *
 * Structured results (enumerations, claims, verification reports,
 * dissections, search hits) are returned as JSON text; the schemas are
 * documented in the project README.
 */

#ifndef COPART_COPART_H
#define COPART_COPART_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define COPART_API __declspec(dllexport)
#else
#define COPART_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum copart_status {
  COPART_OK = 0,
  COPART_ERR_INVALID_ARGUMENT = 1,
  COPART_ERR_MODULUS_MISMATCH = 2,
  COPART_ERR_NON_UNIT = 3,
  COPART_ERR_OVERFLOW = 4,
  COPART_ERR_NOT_PRIME = 5,
  COPART_ERR_NOT_INVERTIBLE = 6,
  COPART_ERR_UNSUPPORTED_PARAMS = 7,
  COPART_ERR_NON_INTEGRAL_OFFSET = 8,
  COPART_ERR_PARSE = 9,
  COPART_ERR_IO = 10,
  COPART_ERR_INTERNAL = 11
} copart_status;

COPART_API const char *copart_status_name(copart_status status);
COPART_API const char *copart_last_error(void);

COPART_API void copart_string_free(char *text);

/* ---------- truncated power series ---------- */

/* modulus 0 selects exact integer coefficients; modulus >= 2 selects
 * canonical residues in [0, modulus) */
typedef struct copart_series copart_series;

COPART_API copart_status copart_series_one(int64_t modulus, uint64_t truncation,
                                           copart_series **out);
COPART_API copart_status copart_series_pochhammer(uint64_t a, uint64_t m, int64_t modulus,
                                                  uint64_t truncation, copart_series **out);
COPART_API copart_status copart_series_theta(uint64_t a, uint64_t b, int64_t modulus,
                                             uint64_t truncation, copart_series **out);
COPART_API copart_status copart_series_eta_power(uint64_t base, uint64_t exponent,
                                                 int64_t modulus, uint64_t truncation,
                                                 copart_series **out);
COPART_API copart_status copart_series_nu(int64_t modulus, uint64_t truncation,
                                          copart_series **out);
COPART_API copart_status copart_series_eo_star(uint64_t truncation, copart_series **out);
COPART_API copart_status copart_series_copartition_gf(uint64_t a, uint64_t b, uint64_t m,
                                                      int64_t modulus, uint64_t truncation,
                                                      copart_series **out);

COPART_API copart_status copart_series_mul(const copart_series *x, const copart_series *y,
                                           copart_series **out);
COPART_API copart_status copart_series_invert(const copart_series *x, copart_series **out);
COPART_API copart_status copart_series_pow(const copart_series *x, uint64_t exponent,
                                           copart_series **out);
COPART_API copart_status copart_series_extract(const copart_series *x, uint64_t step,
                                               uint64_t offset, copart_series **out);
COPART_API copart_status copart_series_reduce(const copart_series *x, int64_t modulus,
                                              copart_series **out);

COPART_API uint64_t copart_series_truncation(const copart_series *x);
COPART_API int64_t copart_series_modulus(const copart_series *x);
/* fails with COPART_ERR_OVERFLOW when an exact coefficient exceeds 64 bits */
COPART_API copart_status copart_series_coeff_int64(const copart_series *x, uint64_t n,
                                                   int64_t *out);
COPART_API copart_status copart_series_coeff_string(const copart_series *x, uint64_t n,
                                                    char **out);
/* writes 1 into *out_congruent when all coefficients up to `upto` agree
 * mod `modulus`; otherwise 0, with the first differing exponent in
 * *out_first_mismatch (pass NULL if not wanted) */
COPART_API copart_status copart_series_congruent(const copart_series *x, const copart_series *y,
                                                 int64_t modulus, uint64_t upto,
                                                 int *out_congruent,
                                                 int64_t *out_first_mismatch);
COPART_API void copart_series_free(copart_series *x);

/* ---------- copartition counting ---------- */

COPART_API copart_status copart_count(uint64_t a, uint64_t b, uint64_t m, uint64_t n,
                                      char **out_decimal);
COPART_API copart_status copart_enumerate_json(uint64_t a, uint64_t b, uint64_t m, uint64_t n,
                                               char **out_json);
COPART_API copart_status copart_refined_counts_json(uint64_t a, uint64_t b, uint64_t m,
                                                    uint64_t n, char **out_json);
/* name is one of "cp111", "cp011", "cp001" */
COPART_API copart_status copart_special_sequence_json(const char *name, uint64_t n_max,
                                                      char **out_json);

/* ---------- number-theory helpers ---------- */

COPART_API copart_status copart_legendre(int64_t a, int64_t p, int *out);
COPART_API copart_status copart_mod_inverse(int64_t a, int64_t modulus, int64_t *out);
COPART_API int copart_is_prime(uint64_t n);

/* ---------- theta dissection ---------- */

COPART_API copart_status copart_dissect_json(uint64_t p, int64_t modulus, uint64_t truncation,
                                             char **out_json);

/* ---------- congruence laboratory ---------- */

/* "cp(3,1,4); 49n+3; mod 2; zero" -> single-claim JSON */
COPART_API copart_status copart_parse_claim(const char *text, char **out_json);
/* family JSON -> claim-array JSON; see README for the family schema */
COPART_API copart_status copart_build_family_json(const char *family_json,
                                                  char **out_claims_json);
COPART_API copart_status copart_catalog_load_json(const char *path, char **out_claims_json);
COPART_API copart_status copart_verify_claims_json(const char *claims_json, uint64_t horizon,
                                                   uint32_t counterexample_cap,
                                                   char **out_report_json);
COPART_API copart_status copart_report_save(const char *report_json, const char *path);
COPART_API copart_status copart_search_json(const char *source_text, int64_t modulus,
                                            uint64_t step_min, uint64_t step_max,
                                            uint64_t horizon, uint64_t min_terms,
                                            char **out_json);
COPART_API copart_status copart_identities_json(uint64_t horizon, char **out_json);

#ifdef __cplusplus
}
#endif

#endif /* COPART_COPART_H */
