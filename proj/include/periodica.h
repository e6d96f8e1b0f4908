/* periodica — arbitrary-precision evaluation of Dirichlet series with
 * periodic coefficients via exponentially convergent acceleration
 * identities, with a direct-summation oracle and an identity-verification
 * harness.
 *
 * C API conventions:
 *   - opaque handles created by *_new / parse functions, released by the
 *     matching *_free; handles are never shared between threads while
 *     mutated (they are immutable after creation, so concurrent reads are
 *     fine);
 *   - every fallible call returns a periodica_status; on failure
 *     periodica_last_error() gives a thread-local message;
 *   - strings returned through char** are heap-allocated; release them
 *     with periodica_string_free().
 */

#ifndef PERIODICA_H
#define PERIODICA_H

#include <stddef.h>

#if defined(_WIN32)
#  define PERIODICA_API __declspec(dllexport)
#else
#  define PERIODICA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum periodica_status {
    PERIODICA_OK = 0,
    PERIODICA_E_INVALID = 1,    /* bad argument / precondition violated */
    PERIODICA_E_PARITY = 2,     /* parity precondition violated */
    PERIODICA_E_DIVERGENT = 3,  /* the requested series diverges */
    PERIODICA_E_DEGENERATE = 4, /* degenerate acceleration parameters */
    PERIODICA_E_PARSE = 5,      /* malformed input text */
    PERIODICA_E_NOMEM = 6,
    PERIODICA_E_INTERNAL = 7
} periodica_status;

typedef struct periodica_ctx periodica_ctx;           /* precision context */
typedef struct periodica_periodic periodica_periodic; /* periodic function */
typedef struct periodica_result periodica_result;     /* evaluation outcome */

PERIODICA_API const char* periodica_version(void);
PERIODICA_API const char* periodica_status_name(int status);
/* Thread-local message describing the most recent failure. */
PERIODICA_API const char* periodica_last_error(void);

/* ---- precision contexts ------------------------------------------------ */

/* precision_bits >= 64; guard_bits >= 16, or 0 for the default (32). */
PERIODICA_API periodica_ctx* periodica_ctx_new(long precision_bits, long guard_bits);
PERIODICA_API void periodica_ctx_free(periodica_ctx* ctx);
PERIODICA_API long periodica_ctx_precision(const periodica_ctx* ctx);
PERIODICA_API long periodica_ctx_guard(const periodica_ctx* ctx);
/* Decimal digits the guard-bit policy defends in printed output. */
PERIODICA_API long periodica_ctx_digits(const periodica_ctx* ctx);

/* ---- periodic functions ------------------------------------------------ */

/* {"period": m, "values": [[re, im], ...]}; integer entries are stored
 * exactly, strings are parsed at context precision. */
PERIODICA_API periodica_status periodica_periodic_parse_json(const periodica_ctx* ctx,
                                                             const char* json_text,
                                                             periodica_periodic** out);
PERIODICA_API periodica_status periodica_periodic_from_int_pairs(long period,
                                                                 const long* re,
                                                                 const long* im,
                                                                 periodica_periodic** out);
PERIODICA_API periodica_status periodica_periodic_constant_one(periodica_periodic** out);
PERIODICA_API periodica_status periodica_periodic_mod4(periodica_periodic** out);
PERIODICA_API void periodica_periodic_free(periodica_periodic* g);
PERIODICA_API long periodica_periodic_period(const periodica_periodic* g);

/* ---- evaluation -------------------------------------------------------- */

typedef struct periodica_eval_opts {
    const char* method; /* "accel" (default), "direct", "closed", "both" */
    const char* alpha;  /* decimal override of the free parameter, or NULL */
    long n_terms;       /* direct-method term count / forced truncation; 0 = auto */
} periodica_eval_opts;

/* L(s,g) for integer s >= 1 (s = 1 needs zero mean). */
PERIODICA_API periodica_status periodica_eval_l(const periodica_ctx* ctx,
                                                const periodica_periodic* g, long s,
                                                const periodica_eval_opts* opts,
                                                periodica_result** out);

/* zeta(s) for odd s >= 3, by the reciprocity acceleration formula. */
PERIODICA_API periodica_status periodica_zeta_odd(const periodica_ctx* ctx, long s,
                                                  const char* alpha,
                                                  periodica_result** out);

/* Catalan's constant. */
PERIODICA_API periodica_status periodica_catalan(const periodica_ctx* ctx,
                                                 periodica_result** out);

/* kind = "cos": sum n^{-2q-1} cos(2 pi n r), q >= 0;
 * kind = "sin": sum n^{-2q}   sin(2 pi n r), q >= 1.  0 < r < 1 (decimal). */
PERIODICA_API periodica_status periodica_lerch(const periodica_ctx* ctx, const char* kind,
                                               long q, const char* r, const char* alpha,
                                               periodica_result** out);

/* ---- results ----------------------------------------------------------- */

PERIODICA_API void periodica_result_free(periodica_result* r);
/* digits <= 0 requests full binary round-trip precision. */
PERIODICA_API periodica_status periodica_result_value_str(const periodica_result* r,
                                                          long digits, char** re,
                                                          char** im);
PERIODICA_API long periodica_result_terms(const periodica_result* r);
PERIODICA_API const char* periodica_result_method(const periodica_result* r);
/* Oracle data; only present for methods "direct" and "both".  rigorous is
 * 1 when the tail bound is rigorous, 0 when heuristic. */
PERIODICA_API periodica_status periodica_result_error_bound_str(const periodica_result* r,
                                                                char** bound,
                                                                int* rigorous);
PERIODICA_API periodica_status periodica_result_oracle_value_str(const periodica_result* r,
                                                                 long digits, char** re,
                                                                 char** im);
/* |accel - direct| for method "both". */
PERIODICA_API periodica_status periodica_result_difference_str(const periodica_result* r,
                                                               char** diff);
PERIODICA_API void periodica_string_free(char* s);

/* ---- verification and benchmarks --------------------------------------- */

/* suite: "lemmas", "theorems" or "all".  The report has one line per case:
 * "<family>/<index> residual=<r> bound=<b> PASS|FAIL". */
PERIODICA_API periodica_status periodica_verify(const periodica_ctx* ctx, const char* suite,
                                                unsigned trials,
                                                unsigned long long seed, char** report,
                                                unsigned* failures);

/* target: "zeta3", "zeta5" or "catalan"; returns CSV rows
 * method,term_index,term_abs,abs_error. */
PERIODICA_API periodica_status periodica_bench(const periodica_ctx* ctx, const char* target,
                                               long direct_terms, char** csv);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PERIODICA_H */
