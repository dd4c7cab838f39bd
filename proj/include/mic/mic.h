/* C interface to the monic integer Chebyshev toolkit.
 *
 * Rationals cross the boundary as text ("a/b" or "a"), polynomials as opaque
 * handles. Strings returned through char** belong to the caller and are
 * released with mic_free_string. Every call returns a mic_status; on an error
 * status mic_last_error() describes the failure for the calling thread. */
#ifndef MIC_MIC_H
#define MIC_MIC_H

#include <stddef.h>

#if defined(_WIN32)
#  define MIC_API __declspec(dllexport)
#else
#  define MIC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mic_status {
  MIC_OK = 0,
  MIC_REFUTED = 1,       /* a bound was disproved */
  MIC_NOT_FOUND = 2,     /* search exhausted, or set outside the catalog */
  MIC_INCONCLUSIVE = 3,  /* only from the prefilter-only certify call */
  MIC_ERR_INVALID_ARGUMENT = -1,
  MIC_ERR_PARSE = -2,
  MIC_ERR_DOMAIN = -3,   /* a mathematical precondition failed */
  MIC_ERR_LIMIT = -4,    /* a caller-supplied cap was reached */
  MIC_ERR_IO = -5,
  MIC_ERR_INTERNAL = -6
} mic_status;

typedef struct mic_poly mic_poly;
typedef struct mic_certificate mic_certificate;
typedef struct mic_table mic_table;

MIC_API const char* mic_version(void);
MIC_API const char* mic_last_error(void);
MIC_API const char* mic_status_name(mic_status status);
MIC_API void mic_free_string(char* s);

/* Polynomials: text form "poly c0 c1 ... cn", ascending powers. */
MIC_API mic_status mic_poly_parse(const char* text, mic_poly** out);
MIC_API void mic_poly_free(mic_poly* p);
MIC_API mic_status mic_poly_format(const mic_poly* p, char** out);
MIC_API mic_status mic_poly_pretty(const mic_poly* p, char** out);
/* -1 for the zero polynomial. */
MIC_API long mic_poly_degree(const mic_poly* p);
MIC_API mic_status mic_poly_eval(const mic_poly* p, const char* x, char** out);

/* Farey fractions. */
MIC_API mic_status mic_farey_sequence(long order, char** out); /* one fraction per line */
MIC_API mic_status mic_farey_intervals(long order, char** out); /* "lo hi" per line */
MIC_API mic_status mic_is_consecutive(const char* lo, const char* hi, int* out);
MIC_API mic_status mic_mediant(const char* lo, const char* hi, char** out);

/* Prescribed values: f(a_i/b_i) = A_i / b_i^n; hi = a1/b1, lo = a2/b2. */
MIC_API mic_status mic_construct_pair(const char* lo, const char* hi, unsigned long degree, const char* target_hi,
                                      const char* target_lo, mic_poly** out);
MIC_API mic_status mic_construct_triple(const char* lo, const char* hi, unsigned long degree, const char* target_hi,
                                        const char* target_lo, const char* target_mediant, unsigned long split,
                                        mic_poly** out);
/* F(p_i) = 1/b_i^n with n <= max_degree; *degree receives n. */
MIC_API mic_status mic_construct_multi(const char* const* points, size_t count, unsigned long max_degree,
                                       unsigned long* degree, mic_poly** out);
MIC_API mic_status mic_admissible_degree(const char* const* points, size_t count, char** out);

/* Sup-norm certification on [lo, hi]. The status mirrors the verdict:
 * MIC_OK (certified) or MIC_REFUTED; the certificate is produced for both. */
MIC_API mic_status mic_certify_bound(const mic_poly* p, const char* lo, const char* hi, const char* bound,
                                     mic_certificate** out);
/* Bound max(1/b1, 1/b2)^deg for a consecutive Farey pair. */
MIC_API mic_status mic_certify_conjecture(const mic_poly* p, const char* lo, const char* hi, mic_certificate** out);
/* Bernstein subdivision only, to the given depth; may be MIC_INCONCLUSIVE. */
MIC_API mic_status mic_certify_prefilter(const mic_poly* p, const char* lo, const char* hi, const char* bound,
                                         unsigned depth, mic_certificate** out);
MIC_API mic_status mic_certificate_verdict(const mic_certificate* c);
/* status=, bound=, method=, refutation_point= lines; witness checks add
 * degree= and tm_upper= lines. */
MIC_API mic_status mic_certificate_format(const mic_certificate* c, char** out);
MIC_API void mic_certificate_free(mic_certificate* c);
MIC_API mic_status mic_sup_norm_enclosure(const mic_poly* p, const char* lo, const char* hi, const char* tol,
                                          char** lower, char** upper);

/* Lattice search for a witness of degree n; MIC_NOT_FOUND when none. */
MIC_API mic_status mic_search_witness(const char* lo, const char* hi, unsigned long degree, const char* delta,
                                      unsigned radius, int full_basis, mic_poly** out);

/* Monic F with |F(z_i)| < epsilon at the points re[i] + im[i] i (im may be
 * NULL for all-real input). */
MIC_API mic_status mic_small_value_polynomial(const char* const* re, const char* const* im, size_t count,
                                              const char* epsilon, unsigned precision, unsigned long max_degree,
                                              mic_poly** out);

/* Constants as key=value text: value=, r=, k=, provenance=. Endpoints accept
 * sqrt(N) expressions. MIC_NOT_FOUND when the set is outside the catalog. */
MIC_API mic_status mic_constant_interval(const char* lo, const char* hi, char** out);
MIC_API mic_status mic_constant_point(const char* point, char** out);
MIC_API mic_status mic_constant_set(const char* const* points, size_t count, char** out);
/* witness may be NULL; adds status=CONJECTURED|PROVEN-EQUAL and basis=. */
MIC_API mic_status mic_conjecture_value(const char* lo, const char* hi, const mic_poly* witness, char** out);

/* Witness tables. */
MIC_API mic_status mic_table_load(const char* path, mic_table** out);
MIC_API size_t mic_table_size(const mic_table* t);
/* One line per entry in file order; *failures counts entries that did not
 * certify. threads = 0 uses every core. */
MIC_API mic_status mic_table_verify(const mic_table* t, unsigned threads, char** report, size_t* failures);
MIC_API void mic_table_free(mic_table* t);

#ifdef __cplusplus
}
#endif

#endif /* MIC_MIC_H */
