/* Public C interface of the Krawtchouk exact-arithmetic library.
 *
 * All numeric results are exact rationals rendered as "p/q" strings in
 * canonical reduced form ("p" when q = 1). Strings returned through char**
 * out-parameters are heap-allocated; release them with kraw_string_free.
 * Objects behind opaque handles are released with their _free function.
 * Every function returning kraw_status leaves out-parameters untouched on
 * failure; kraw_last_error() describes the most recent failure on the
 * calling thread.
 */

#ifndef KRAWTCHOUK_H
#define KRAWTCHOUK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kraw_status {
    KRAW_OK = 0,
    KRAW_EINVAL = 1,   /* parameter outside its documented domain */
    KRAW_EPARSE = 2,   /* malformed rational, method, suite or format */
    KRAW_ENOMEM = 3,
    KRAW_EINTERNAL = 4
} kraw_status;

typedef struct kraw_poly kraw_poly;           /* univariate polynomial */
typedef struct kraw_intervals kraw_intervals; /* isolating-interval list */
typedef struct kraw_reports kraw_reports;     /* verification report list */

const char* kraw_status_str(kraw_status status);
const char* kraw_last_error(void);
void kraw_string_free(char* s);

/* --- polynomials ------------------------------------------------------- */

/* K_{m,n,s} for n >= 0, s >= 2, 0 <= m <= n;
 * method is "definition", "gf" or "recurrence". */
kraw_status kraw_poly_krawtchouk(long n, long s, long m, const char* method, kraw_poly** out);

/* P_j(X) = X(X-1)...(X-j+1)/j! */
kraw_status kraw_poly_falling_basis(long j, kraw_poly** out);

void kraw_poly_free(kraw_poly* poly);

/* -1 for the zero polynomial */
long kraw_poly_degree(const kraw_poly* poly);

/* coefficient of X^k as a "p/q" string; 0 beyond the degree */
kraw_status kraw_poly_coeff(const kraw_poly* poly, long k, char** out);

/* exact value at the rational point x, itself a "p/q" string */
kraw_status kraw_poly_eval(const kraw_poly* poly, const char* x, char** out);

/* K_{m,n,s}(i) via the generating-function expansion, 0 <= i <= n */
kraw_status kraw_value(long n, long s, long m, long i, char** out);

/* <K_k, K_l> under the weight C(n,i)(s-1)^i */
kraw_status kraw_gram_entry(long n, long s, long k, long l, char** out);

/* --- certified root isolation ------------------------------------------ */

/* Isolates the m real roots of K_{m,n,s} in (0, n); width is a positive
 * rational such as "1/4294967296". */
kraw_status kraw_isolate_roots(long n, long s, long m, const char* width, kraw_intervals** out);

void kraw_intervals_free(kraw_intervals* intervals);
size_t kraw_intervals_count(const kraw_intervals* intervals);

/* 1 when the interval pins its root exactly (lo == hi), else 0 */
int kraw_interval_exact(const kraw_intervals* intervals, size_t index);
kraw_status kraw_interval_lo(const kraw_intervals* intervals, size_t index, char** out);
kraw_status kraw_interval_hi(const kraw_intervals* intervals, size_t index, char** out);

/* --- verification suite ------------------------------------------------- */

/* suite: all | pascal | value-rec | poly-rec | summation | symmetry |
 *        kernel | orthogonality | roots | interlacing
 * s_set: comma-separated integers >= 2, e.g. "2,3,5"
 * width: positive rational; NULL selects the default 1/2^32
 * extended: nonzero also runs the m = n summation edge case */
kraw_status kraw_verify(const char* suite, long n_max, const char* s_set,
                        unsigned long long seed, const char* width, int extended,
                        kraw_reports** out);

void kraw_reports_free(kraw_reports* reports);
size_t kraw_reports_count(const kraw_reports* reports);
int kraw_reports_all_passed(const kraw_reports* reports);
int kraw_report_passed(const kraw_reports* reports, size_t index);
kraw_status kraw_report_identity(const kraw_reports* reports, size_t index, char** out);

/* --- rendered documents (the CLI surface) ------------------------------- */

/* format: json | csv | plain. JSON documents carry schema_version "1".
 * method additionally accepts "all". */
kraw_status kraw_doc_coeffs(long n, long s, long m, const char* method, const char* format,
                            char** out);
kraw_status kraw_doc_table(long n, long s, long m_max, const char* format, char** out);
kraw_status kraw_doc_roots(long n, long s, long m, const char* width, const char* format,
                           char** out);
kraw_status kraw_doc_gram(long n, long s, const char* format, char** out);
kraw_status kraw_doc_verify(const char* suite, long n_max, const char* s_set,
                            unsigned long long seed, const char* width, int extended,
                            const char* format, int* all_passed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* KRAWTCHOUK_H */
