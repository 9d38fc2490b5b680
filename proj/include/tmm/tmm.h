#ifndef TMM_TMM_H
#define TMM_TMM_H

/*
 * C interface to the tmm library: Magnus expansions of free groups, the crossed
 * homomorphism tau_1 and the classes h_p / hbar_p on braid groups, bar cycles of
 * pure braid groups and linear-independence certificates.
 *
 * Every function returns a tmm_status. On failure the message is available from
 * tmm_last_error() (per thread) until the next call. Strings returned through
 * `char** out` are owned by the caller and must be released with tmm_string_free().
 * All JSON uses rationals encoded as "p/q" strings.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TMM_API __declspec(dllexport)
#else
#define TMM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tmm_status {
  TMM_OK = 0,
  TMM_ERR_ARGUMENT = 1, /* null pointer or value out of range */
  TMM_ERR_PARSE = 2,    /* malformed word, braid, tuple or cycle text */
  TMM_ERR_DOMAIN = 3,   /* mathematically invalid request (rank mismatch, non-commuting torus, ...) */
  TMM_ERR_CHECK = 4,    /* an internal consistency check failed */
  TMM_ERR_INTERNAL = 5
} tmm_status;

typedef enum tmm_form {
  TMM_FORM_TENSOR = 0,   /* hbar_p in H^{(x)p} */
  TMM_FORM_EXTERIOR = 1, /* image in Lambda^p H, unnormalized alternating sum */
  TMM_FORM_HOM = 2       /* h_p in Hom(H, H^{(x)(p+1)}) */
} tmm_form;

typedef struct tmm_expansion tmm_expansion;
typedef struct tmm_braid tmm_braid;
typedef struct tmm_cycle tmm_cycle;

TMM_API const char* tmm_version(void);
TMM_API const char* tmm_last_error(void);
/* 0-based column of the last parse error, or -1. */
TMM_API int64_t tmm_last_error_position(void);
TMM_API void tmm_string_free(char* s);

/* Expansions. `degree` is the truncation N (1..12). */
TMM_API tmm_status tmm_expansion_standard(int n, int degree, tmm_expansion** out);
/* {"tails": [tensor, ...]}: theta(x_i) = 1 + X_i + tails[i-1], tails of degree >= 2. */
TMM_API tmm_status tmm_expansion_from_json(int n, int degree, const char* json, tmm_expansion** out);
TMM_API void tmm_expansion_free(tmm_expansion* e);
/* Tensor JSON of theta(word). */
TMM_API tmm_status tmm_expand(const tmm_expansion* e, const char* word, char** json_out);

/* Braids on n strands: s<k>, A(i,j), twist(k), twist(i,j), each with optional ^<int>. */
TMM_API tmm_status tmm_braid_parse(int n, const char* text, tmm_braid** out);
TMM_API void tmm_braid_free(tmm_braid* b);
TMM_API tmm_status tmm_braid_string(const tmm_braid* b, char** out);
/* Equality in B_n, decided through the Artin action on F_n. */
TMM_API tmm_status tmm_braid_equal(const tmm_braid* a, const tmm_braid* b, int* equal);
/* {"n", "perm": [image of strand 1, ...], "pure": bool} */
TMM_API tmm_status tmm_braid_permutation(const tmm_braid* b, char** json_out);
/* {"n", "images": ["x1 ...", ...], "inverse_images": [...]} */
TMM_API tmm_status tmm_braid_xi(const tmm_braid* b, char** json_out);

/* tau_1 of the automorphism xi(b) as Hom JSON. */
TMM_API tmm_status tmm_tau1(const tmm_expansion* e, const tmm_braid* b, char** json_out);
/* The degree-p class evaluated on a tuple "g1;g2;...;gp" of braids. */
TMM_API tmm_status tmm_hbar(const tmm_expansion* e, int p, const char* tuple, tmm_form form, char** json_out);

/* Bar cycles: "torus:g1|g2|...", "cross:torus:... * torus:...", or "unit". */
TMM_API tmm_status tmm_cycle_parse(int n, const char* text, tmm_cycle** out);
TMM_API void tmm_cycle_free(tmm_cycle* c);
TMM_API tmm_status tmm_cycle_degree(const tmm_cycle* c, int* degree);
/* Pairing of the cup product of hbar_{parts[k]} (exterior form) with a cycle; with a
   single part and TMM_FORM_TENSOR the tensor-valued hbar_p is paired instead. */
TMM_API tmm_status tmm_pair(const tmm_expansion* e, const int* parts, size_t nparts, tmm_form form,
                            const tmm_cycle* c, char** json_out);

/* Certificate JSON; *pass = 1 when the pairing rank equals the number of partitions. */
TMM_API tmm_status tmm_certificate(int n, int q, int catalog_depth, char** json_out, int* pass);
/* Scalar identity for the restriction of hbar_lambda to the block subgroup. */
TMM_API tmm_status tmm_assertion_a(const int* parts, size_t nparts, int n, uint64_t seed, int samples,
                                   char** json_out, int* pass);

/* Suites: lemmas, cocycle, primitivity, expansion-independence, independence-small. */
TMM_API tmm_status tmm_check_suite(const char* name, uint64_t seed, char** json_out, int* pass);
TMM_API uint64_t tmm_default_seed(void);

#ifdef __cplusplus
}
#endif

#endif
