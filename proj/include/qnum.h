/* qnum: exact arithmetic for q-deformed rational and real numbers.
 *
 * C interface to the shared library. All objects are opaque handles created
 * and destroyed here; every function returns a qnum_status, with results
 * through out-parameters. Strings returned through char** are heap-allocated
 * and must be released with qnum_string_free. On error, qnum_last_error()
 * returns a thread-local diagnostic message.
 */
#ifndef QNUM_H
#define QNUM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qnum_status {
  QNUM_OK = 0,
  QNUM_ERR_INVALID_ARGUMENT,
  QNUM_ERR_NOT_COPRIME,
  QNUM_ERR_ZERO_DENOMINATOR,
  QNUM_ERR_ZERO_INVERSE,
  QNUM_ERR_MALFORMED_EXPANSION,
  QNUM_ERR_TRUNCATION_BEYOND_FINITE,
  QNUM_ERR_STABILIZATION_NOT_REACHED,
  QNUM_ERR_DEGENERATE_QUADRATIC,
  QNUM_ERR_NON_CONVERGENCE,
  QNUM_ERR_DENOMINATOR_VANISHES,
  QNUM_ERR_INSUFFICIENT_COEFFICIENTS,
  QNUM_ERR_PARSE,
  QNUM_ERR_INTERNAL
} qnum_status;

typedef struct qnum_poly qnum_poly;       /* integer polynomial in q */
typedef struct qnum_ratfunc qnum_ratfunc; /* reduced rational function */
typedef struct qnum_series qnum_series;   /* truncated power/Laurent series */
typedef struct qnum_cf qnum_cf;           /* continued fraction */

const char* qnum_version(void);
const char* qnum_status_name(qnum_status status);
/* Thread-local message for the most recent failure in this thread. */
const char* qnum_last_error(void);

void qnum_string_free(char* s);
void qnum_poly_free(qnum_poly* p);
void qnum_ratfunc_free(qnum_ratfunc* f);
void qnum_series_free(qnum_series* s);
void qnum_cf_free(qnum_cf* cf);

/* ---- continued fractions ------------------------------------------------ */

/* Text forms: regular "[a1,a2,...;(p1,...)]", HJ "[[c1,...;(p1,...)]]" or
 * "hj:[c1,...;(p1,...)]"; ";(...)" is the optional period. */
qnum_status qnum_cf_parse(const char* text, qnum_cf** out);
qnum_status qnum_cf_format(const qnum_cf* cf, char** out);
qnum_status qnum_cf_json(const qnum_cf* cf, char** out);
/* Even-length regular expansion (hj = 0) or minus-sign expansion (hj = 1). */
qnum_status qnum_cf_expand(int64_t r, int64_t s, int hj, qnum_cf** out);
/* Hirzebruch conversion in either direction. */
qnum_status qnum_cf_convert(const qnum_cf* cf, int to_hj, qnum_cf** out);
/* JSON array of the first n convergents as {"r": "...", "s": "..."}. */
qnum_status qnum_cf_convergents_json(const qnum_cf* cf, int n, char** out);

/* ---- q-rationals --------------------------------------------------------- */

/* [r/s]_q by the defining recurrences; r may be negative, gcd(|r|, s) = 1. */
qnum_status qnum_qrat(int64_t r, int64_t s, qnum_ratfunc** out);
/* Evaluate a finite continued fraction through its q-deformation. */
qnum_status qnum_qrat_eval_cf(const qnum_cf* cf, qnum_ratfunc** out);
qnum_status qnum_ratfunc_display(const qnum_ratfunc* f, char** out);
qnum_status qnum_ratfunc_json(const qnum_ratfunc* f, char** out);

/* ---- q-real series ------------------------------------------------------- */

/* Stabilized series of the value of cf through exponent order-1. */
qnum_status qnum_series_from_cf(const qnum_cf* cf, int order, qnum_series** out);
/* Taylor expansion of [r/s]_q (Laurent when r < 0). */
qnum_status qnum_series_from_fraction(int64_t r, int64_t s, int order, qnum_series** out);
qnum_status qnum_series_display(const qnum_series* s, char** out);
qnum_status qnum_series_json(const qnum_series* s, char** out);
/* OEIS b-file style dump: "exponent coefficient" lines. */
qnum_status qnum_series_bfile(const qnum_series* s, char** out);

/* Integer quadratic A X^2 + B X + C = 0 satisfied by the series of a
 * periodic continued fraction. */
qnum_status qnum_functional_equation_json(const qnum_cf* cf, char** out);

/* ---- polynomial families ------------------------------------------------- */

/* family: "fib" or "pell"; tilde selects the mirror family. */
qnum_status qnum_family_poly(const char* family, int n, int tilde, qnum_poly** out);
qnum_status qnum_family_quotient(const char* family, int n, qnum_ratfunc** out);
/* rows as CSV (csv = 1) or an OEIS-style flat list (csv = 0). */
qnum_status qnum_family_triangle(const char* family, int rows, int tilde, int csv, char** out);
qnum_status qnum_poly_display(const qnum_poly* p, char** out);
qnum_status qnum_poly_text(const qnum_poly* p, char** out);
qnum_status qnum_poly_json(const qnum_poly* p, char** out);

/* ---- analysis ------------------------------------------------------------ */

/* tol <= 0 picks the default (QNUM_PRECISION environment variable or 1e-12). */
qnum_status qnum_poly_roots_json(const qnum_poly* p, double tol, char** out);
qnum_status qnum_poly_roots_csv(const qnum_poly* p, double tol, char** out);
/* Annulus reports for the family and its mirror, n up to n_max. */
qnum_status qnum_annulus_json(const char* family, int n_max, char** out);
/* Exact radius of convergence of a periodic continued fraction. */
qnum_status qnum_radius_exact_json(const qnum_cf* cf, char** out);
/* Numeric growth estimate from `depth` series coefficients. */
qnum_status qnum_radius_numeric_json(const qnum_cf* cf, int depth, char** out);
/* Tail-condition checker plus empirical denominator scan. */
qnum_status qnum_genthm_json(const qnum_cf* cf, int depth, char** out);
/* Randomized lower-bound scan; threads = 0 uses hardware concurrency. */
qnum_status qnum_scan_json(int samples, uint64_t seed, int threads, char** out);

/* ---- verification --------------------------------------------------------- */

/* Runs the reproduction suite; *all_pass is 1 when every check passed.
 * The report has one PASS/FAIL line per check. */
qnum_status qnum_verify_paper(char** report, int* all_pass);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QNUM_H */
