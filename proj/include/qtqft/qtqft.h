/*
 * qtqft — exact quantum Schubert calculus and weighted TQFT invariants for
 * Grassmannians, exposed as a C shared-library API.
 *
 * Usage pattern: create an engine for a box (r, s), call computation
 * functions, release returned strings with qtqft_string_free, destroy the
 * engine. Every computation returns a status code and, on success, a
 * canonical JSON document (identical inputs produce byte-identical output).
 * On failure, qtqft_engine_last_error describes what went wrong.
 *
 * Engines are not thread-safe; use one engine per thread or synchronize
 * externally. Distinct engines never share mutable state.
 */
#ifndef QTQFT_H
#define QTQFT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define QTQFT_API_VERSION 1

typedef struct qtqft_engine_t qtqft_engine_t;

enum qtqft_status {
  QTQFT_OK = 0,
  QTQFT_ERROR_ARGUMENT = 1,  /* invalid input (partitions, ranges, syntax) */
  QTQFT_ERROR_INTEGRITY = 2, /* exact/float mismatch or non-monomial extraction */
  QTQFT_ERROR_RESOURCE = 3,  /* configured entry cap exceeded */
  QTQFT_ERROR_IO = 4,        /* cache file could not be written */
  QTQFT_ERROR_INTERNAL = 5
};

int qtqft_api_version(void);
const char* qtqft_strerror(int code);

/* Engine lifecycle. r >= 1 and s >= 1 select Gr(r, r+s). */
int qtqft_engine_create(int r, int s, qtqft_engine_t** engine_out);
void qtqft_engine_destroy(qtqft_engine_t* engine);

/* Structure-constant cache directory; NULL clears the explicit setting and
 * falls back to the QTQFT_CACHE_DIR environment variable. */
int qtqft_engine_set_cache_dir(qtqft_engine_t* engine, const char* dir);
/* Cap on materialized table/tensor entries (default 1000000). */
int qtqft_engine_set_max_entries(qtqft_engine_t* engine, uint64_t cap);
/* When enabled, emitted Laurent values are specialized at q = 1. */
int qtqft_engine_set_q_at_one(qtqft_engine_t* engine, int enabled);

/* Message for the most recent failure on this engine ("" when none). The
 * pointer stays valid until the next call on the same engine. */
const char* qtqft_engine_last_error(const qtqft_engine_t* engine);

/*
 * Computations. Partitions are comma-separated weakly decreasing integers
 * ("2,1"; "" or "0" for the empty class); shorter tuples are zero-padded.
 * Each function stores a freshly allocated JSON string in *json_out on
 * success; release it with qtqft_string_free.
 */

/* Quantum product sigma_a * sigma_b in the Schubert basis. */
int qtqft_product(qtqft_engine_t* engine, const char* a, const char* b,
                  char** json_out);

/* Poincare pairing <sigma_a, sigma_b>. */
int qtqft_pair(qtqft_engine_t* engine, const char* a, const char* b,
               char** json_out);

/* Gromov-Witten style integral over the compiled Quot scheme of a general
 * degree-d bundle on a genus-g curve, with the given Schubert insertions. */
int qtqft_gw(qtqft_engine_t* engine, int genus, int degree,
             const char* const* insertions, size_t n_insertions,
             char** json_out);

/* Full weighted-TQFT tensor F(g|d)_m^n. */
int qtqft_tensor(qtqft_engine_t* engine, int genus, int degree, int m, int n,
                 char** json_out);

/* Verlinde number V_g, exact, cross-checked against the sine formula. */
int qtqft_verlinde(qtqft_engine_t* engine, int genus, char** json_out);

/* Point count of the finite Quot scheme for gamma in [0, gcd(r,s)), exact,
 * cross-checked against the spectral formula. */
int qtqft_holla(qtqft_engine_t* engine, int genus, int gamma, char** json_out);

/* Closed weighted invariant: exact q=1 value plus the spectral sum. */
int qtqft_closed(qtqft_engine_t* engine, int genus, int degree, char** json_out);

/* Image class of the Quot scheme in G^N (output-only tensor with N slots). */
int qtqft_eta(qtqft_engine_t* engine, int genus, int degree, int n_slots,
              char** json_out);

/* Spectral data table: subsets, roots, Vandermonde norms, couplings a_I. */
int qtqft_spectrum(qtqft_engine_t* engine, char** json_out);

/* Runs the invariant self-check suite ("fast" or "all"). Returns
 * QTQFT_ERROR_INTEGRITY when any check fails; *json_out carries the full
 * report either way. */
int qtqft_check(qtqft_engine_t* engine, const char* suite, char** json_out);

void qtqft_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* QTQFT_H */
