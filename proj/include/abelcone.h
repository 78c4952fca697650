/* abelcone: exact intersection-ring and positivity-cone computations on the
 * self-product of a principally polarized abelian variety.
 *
 * C API over an opaque-handle core. All functions return ABEL_OK (0) on
 * success or a negative error code; results come back through out-parameters.
 * Strings returned through char** are heap-allocated and must be released
 * with abel_string_free. Numeric payloads are exact rationals rendered as
 * strings; nothing is rounded.
 */

#ifndef ABELCONE_H
#define ABELCONE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define ABEL_OK 0
#define ABEL_E_DIMENSION (-1)
#define ABEL_E_DEGREE (-2)
#define ABEL_E_PARSE (-3)
#define ABEL_E_ARGUMENT (-4)
#define ABEL_E_REPRESENTATION (-5)
#define ABEL_E_UNSUPPORTED (-6)
#define ABEL_E_INTERNAL (-7)

/* Verdict statuses. */
#define ABEL_MEMBER 0
#define ABEL_NONMEMBER 1
#define ABEL_UNKNOWN 3

typedef struct abel_class abel_class;
typedef struct abel_verdict abel_verdict;

const char* abel_version(void);

/* Thread-local message for the most recent failing call in this thread. */
const char* abel_last_error(void);

void abel_string_free(char* s);

/* ---- classes ---------------------------------------------------------- */

/* Parse a class document {"g":..,"degree":..,"coeffs":{...}}. */
int abel_class_parse(const char* json_text, abel_class** out);

/* Canonical JSON document of a class. */
int abel_class_to_json(const abel_class* x, char** out);

int abel_class_g(const abel_class* x);
int abel_class_degree(const abel_class* x);

void abel_class_free(abel_class* x);

/* Exact ring product. degree_out receives the sum of degrees; when it
 * exceeds 2g the product is zero and *out is NULL with scalar_out "0".
 * When the product lands in the top degree, *out is NULL and scalar_out
 * carries the exact rational value; otherwise *out is the product class. */
int abel_product(const abel_class* x, const abel_class* y, abel_class** out, char** scalar_out,
                 int* degree_out);

/* ---- cone membership --------------------------------------------------- */

typedef struct {
  uint64_t seed;      /* descent and sampling seed */
  int restarts;       /* weak-oracle restarts (>= 1) */
  double tol;         /* weak-oracle tolerance on the normalized objective */
  const char* grid;   /* comma-separated rationals for the decomposition grid,
                         NULL for the default grid */
  int lp_float_first; /* nonzero: probe the LP support in doubles first */
} abel_query_opts;

void abel_query_opts_default(abel_query_opts* opts);

/* cone: "semi", "nef", "weak", "psef1", "psef-curve", "sym2".
 * g: ambient dimension for "semi"/"weak"/"sym2" (0 = the class's own g). */
int abel_member(const abel_class* x, const char* cone, int g, const abel_query_opts* opts,
                abel_verdict** out);

int abel_verdict_status(const abel_verdict* v);
int abel_verdict_json(const abel_verdict* v, char** out);
void abel_verdict_free(abel_verdict* v);

/* ---- reproduction suite and auxiliary checks --------------------------- */

/* Run the verification suite. only may be NULL (all items); the report is
 * rendered as JSON when as_json is nonzero, as a pass/fail table otherwise.
 * all_pass receives 1 when every executed item passed. */
int abel_verify(int g_min, int g_max, const char* only, uint64_t seed, int as_json, char** report,
                int* all_pass);

/* Pontryagin/product-formula checks for 0 <= k <= n at the given n, on
 * `samples` random degree-2 classes. */
int abel_fourier_check(int n, int samples, uint64_t seed, char** report, int* all_pass);

/* The archived nef-not-pseudoeffective separation witness at (n, k). */
int abel_cm_witness(int n, int k, char** certificate_json);

#ifdef __cplusplus
}
#endif

#endif /* ABELCONE_H */
