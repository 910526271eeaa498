/* biham: exact computation of dimensions and S_n x SL2 characters of the
 * operads Lie2 (two compatible Lie brackets), Com2 and P2 (bihamiltonian),
 * with three independent routes (closed formulas, Koszul functional-equation
 * inversion, brute-force free algebra), the recursive monomial basis and the
 * labeled partition-poset checks.
 *
 * All functions are thread-safe. Results are returned as strings (JSON or
 * plain text) owned by the library; release them with biham_string_free.
 * Status codes mirror the CLI exit contract.
 */
#ifndef BIHAM_H
#define BIHAM_H

#ifdef __cplusplus
extern "C" {
#endif

#ifndef BIHAM_API
#if defined(_WIN32)
#define BIHAM_API __declspec(dllexport)
#else
#define BIHAM_API __attribute__((visibility("default")))
#endif
#endif

/* Everything computed as requested (for verify: every check passed). */
#define BIHAM_OK 0
/* A verification suite ran to completion with failing checks. */
#define BIHAM_VERIFY_FAILED 1
/* Malformed arguments (unknown operad/route/suite, bad cycle type, ...). */
#define BIHAM_INVALID_ARGUMENT 2
/* A computation exceeded its resource budget (poset chain count). */
#define BIHAM_BUDGET_EXCEEDED 3
/* Unexpected internal failure; see biham_ctx_last_error. */
#define BIHAM_INTERNAL_ERROR 4

/* Opaque evaluation context. Holds the worker-thread cap and the last error
 * message; heavyweight intermediates (character series, quotient models) are
 * cached process-wide behind it. */
typedef struct biham_ctx biham_ctx;

BIHAM_API biham_ctx* biham_ctx_new(void);
BIHAM_API void biham_ctx_free(biham_ctx* ctx);

/* Caps worker threads for parallel sections; 0 restores the default
 * (hardware parallelism). */
BIHAM_API void biham_ctx_set_jobs(biham_ctx* ctx, int jobs);

/* Message describing the last non-OK status returned through this context;
 * owned by the context, valid until the next call with it. */
BIHAM_API const char* biham_ctx_last_error(const biham_ctx* ctx);

BIHAM_API const char* biham_version(void);
BIHAM_API void biham_string_free(char* s);

/* Dimension table; JSON shape {"operad","route","dims":[{"n","dim"},...]}.
 * operad: "lie2" | "p2" | "com2"; route: "formula" | "invert" | "brute"
 * (brute: lie2 only, n <= 6); format: "json" | "text". */
BIHAM_API int biham_dims(biham_ctx* ctx, const char* operad, int max_n,
                         const char* route, const char* format, char** out);

/* Character table for one class (cycle_type: multiplicities n_1..n_k summing
 * with weights to n; pass NULL/0 for all classes of S_n). route: "formula" |
 * "mt" | "brute"; the mt route carries a "printed_form" field whenever the
 * literal printed display disagrees with the calibrated evaluation.
 * format: "json" | "text". */
BIHAM_API int biham_character(biham_ctx* ctx, const char* operad, int n,
                              const int* cycle_type, int cycle_type_len,
                              const char* route, const char* format, char** out);

/* Character series in the power-sum basis as SymFunc JSON
 * {"truncation","kind","terms":[{"exponents","coeff"},...]}.
 * name: "lie2" | "p2" | "com2" | "com" | "lie" | "h_ll1". */
BIHAM_API int biham_series(biham_ctx* ctx, const char* name, int truncation,
                           char** out);

/* Runs a verification suite: "dims" | "characters" | "multiplicities" |
 * "basis" | "poset" | "residue" | "all". max_n <= 0 selects the per-suite
 * default caps. format: "json" (machine-readable report) | "text" (human
 * summary). Returns BIHAM_VERIFY_FAILED when checks fail; the report is
 * still written. */
BIHAM_API int biham_verify(biham_ctx* ctx, const char* suite, int max_n,
                           const char* format, char** out);

/* Basis queries; JSON shape {"n","count"[,"monomials"][,"independence"]};
 * with want_p2, counts/listings of the star-product basis instead. Counting
 * up to n = 7, independence up to n = 5. format: "json" | "text". */
BIHAM_API int biham_basis(biham_ctx* ctx, int n, int want_p2, int want_list,
                          int want_independence, const char* format, char** out);

/* Poset checks on Pi_n(Com2): check = "homology" | "semimodular" | "cm" |
 * "star"; format: "json" | "text" | "edges" (cover pairs, one per line). */
BIHAM_API int biham_poset(biham_ctx* ctx, int n, const char* check,
                          const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* BIHAM_H */
