/* arrcalc: exact characteristic polynomials of deformed reflection
 * arrangements, behind a plain C interface.
 *
 * All handles are opaque; every fallible call returns an arrcalc_status and
 * writes its result through out-parameters. Strings returned through char**
 * are heap-allocated and must be released with arrcalc_string_free. A failing
 * call leaves a thread-local message readable via arrcalc_last_error.
 */
#ifndef ARRCALC_H
#define ARRCALC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arrcalc_status {
    ARRCALC_OK = 0,
    ARRCALC_ERR_INVALID = 1,     /* bad arguments or malformed spec */
    ARRCALC_ERR_UNSUPPORTED = 2, /* outside the closed-form catalog */
    ARRCALC_ERR_GUARD = 3,       /* instance exceeds a size guard */
    ARRCALC_ERR_ASSERT = 4,      /* internal exactness check failed */
    ARRCALC_ERR_NOCONV = 5,      /* root refinement did not converge */
    ARRCALC_ERR_PARSE = 6,
    ARRCALC_ERR_INTERNAL = 7
} arrcalc_status;

typedef struct arrcalc_spec arrcalc_spec;
typedef struct arrcalc_arrangement arrcalc_arrangement;
typedef struct arrcalc_poly arrcalc_poly;
typedef struct arrcalc_riemann arrcalc_riemann;

const char* arrcalc_version(void);
const char* arrcalc_last_error(void);
void arrcalc_string_free(char* s);

/* ---- family specs: "FAMILY:n:lo:hi", or "FAMILY:n:a" for S62/S63 ---- */
arrcalc_status arrcalc_spec_parse(const char* text, arrcalc_spec** out);
void arrcalc_spec_free(arrcalc_spec* spec);
arrcalc_status arrcalc_spec_format(const arrcalc_spec* spec, char** out);
int arrcalc_spec_dim(const arrcalc_spec* spec);
int arrcalc_spec_rank(const arrcalc_spec* spec);
arrcalc_status arrcalc_spec_reflect(const arrcalc_spec* spec, arrcalc_spec** out);

/* ---- concrete hyperplane lists ---- */
arrcalc_status arrcalc_build(const arrcalc_spec* spec, arrcalc_arrangement** out);
void arrcalc_arrangement_free(arrcalc_arrangement* arr);
int arrcalc_arrangement_dim(const arrcalc_arrangement* arr);
long arrcalc_arrangement_size(const arrcalc_arrangement* arr);     /* as generated */
long arrcalc_arrangement_distinct(const arrcalc_arrangement* arr); /* canonical dedup */
int arrcalc_arrangement_modulus(const arrcalc_arrangement* arr);
/* number of points of (Z_q)^n on none of the hyperplanes, as a decimal string */
arrcalc_status arrcalc_count_points(const arrcalc_arrangement* arr, long q, int threads,
                                    char** count_out);

/* ---- characteristic polynomials ----
 * method is "closed", "ff" or "mobius". provenance_out may be NULL. */
arrcalc_status arrcalc_chi(const arrcalc_spec* spec, const char* method, int threads,
                           arrcalc_poly** out, char** provenance_out);

void arrcalc_poly_free(arrcalc_poly* p);
int arrcalc_poly_degree(const arrcalc_poly* p);
arrcalc_status arrcalc_poly_coeff(const arrcalc_poly* p, int k, char** decimal_out);
int arrcalc_poly_equal(const arrcalc_poly* p, const arrcalc_poly* q);
arrcalc_status arrcalc_poly_to_string(const arrcalc_poly* p, char** out);
arrcalc_status arrcalc_poly_eval(const arrcalc_poly* p, const char* x_decimal,
                                 char** value_out);
/* all complex roots with multiplicity, sorted by (re, im); *count_out is set
 * to the degree. capacity below the degree is an error. */
arrcalc_status arrcalc_poly_roots(const arrcalc_poly* p, double* re, double* im,
                                  int capacity, int* count_out);

/* ---- regions ---- */
arrcalc_status arrcalc_regions(const arrcalc_poly* chi, int dim, char** count_out);
arrcalc_status arrcalc_linial_regions(const char* family, int n, char** count_out);

/* ---- shared-real-part verification over [-a+1, b] ---- */
arrcalc_status arrcalc_verify_riemann(const char* family, int n, long a, long b, double tol,
                                      int threads, arrcalc_riemann** out);
void arrcalc_riemann_free(arrcalc_riemann* rep);
long arrcalc_riemann_hyperplanes(const arrcalc_riemann* rep);
int arrcalc_riemann_rank(const arrcalc_riemann* rep);
double arrcalc_riemann_target(const arrcalc_riemann* rep);
double arrcalc_riemann_deviation(const arrcalc_riemann* rep);
int arrcalc_riemann_pass(const arrcalc_riemann* rep);
arrcalc_status arrcalc_riemann_roots(const arrcalc_riemann* rep, double* re, double* im,
                                     int capacity, int* count_out);
/* the ambient polynomial when essential is 0, the degree-rank one otherwise */
arrcalc_status arrcalc_riemann_chi(const arrcalc_riemann* rep, int essential,
                                   arrcalc_poly** out);

#ifdef __cplusplus
}
#endif

#endif /* ARRCALC_H */
