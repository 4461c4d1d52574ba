/*
 * Copyright 2026 The detrep authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C API of the detrep shared library.
 *
 * Objects are opaque handles created from JSON and destroyed with the
 * matching *_free call. Every function returns a detrep_status; on failure
 * detrep_last_error() describes the problem (thread-local). Strings returned
 * through char** are heap-allocated and released with detrep_string_free.
 *
 * Verification outcomes are verdicts inside the returned report JSON, not
 * error codes; DETREP_ERR_VERIFICATION is reserved for operations whose
 * contract is violated (e.g. a realization that fails its sample check).
 */

#ifndef DETREP_H
#define DETREP_H

#include <stddef.h>

#if defined(_WIN32)
#define DETREP_API __declspec(dllexport)
#else
#define DETREP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum detrep_status {
    DETREP_OK = 0,
    DETREP_ERR_INVALID_ARGUMENT = 1,
    DETREP_ERR_PARSE = 2,
    DETREP_ERR_DIMENSION = 3,
    DETREP_ERR_MODE = 4,
    DETREP_ERR_SINGULAR = 5,
    DETREP_ERR_NOT_CONTRACTION = 6,
    DETREP_ERR_SIZE_CAP = 7,
    DETREP_ERR_PRECONDITION = 8,
    DETREP_ERR_VERIFICATION = 9,
    DETREP_ERR_INTERNAL = 10
} detrep_status;

typedef struct detrep_poly detrep_poly;
typedef struct detrep_matrix detrep_matrix;
typedef struct detrep_representation detrep_representation;

DETREP_API const char* detrep_version(void);
DETREP_API const char* detrep_last_error(void);
DETREP_API void detrep_string_free(char* s);

/* ---- polynomials ------------------------------------------------------- */

DETREP_API detrep_status detrep_poly_from_json(const char* json, detrep_poly** out);
DETREP_API detrep_status detrep_poly_to_json(const detrep_poly* p, char** out);
DETREP_API void detrep_poly_free(detrep_poly* p);
DETREP_API detrep_status detrep_poly_num_vars(const detrep_poly* p, int* out);
DETREP_API detrep_status detrep_poly_is_exact(const detrep_poly* p, int* out);
DETREP_API detrep_status detrep_poly_to_float(const detrep_poly* p, detrep_poly** out);
DETREP_API detrep_status detrep_poly_to_exact(const detrep_poly* p, detrep_poly** out);
DETREP_API detrep_status detrep_poly_eval(const detrep_poly* p, const double* z_re,
                                          const double* z_im, size_t len, double* out_re,
                                          double* out_im);
DETREP_API detrep_status detrep_poly_degrees(const detrep_poly* p, unsigned* deg, size_t len,
                                             unsigned* tdeg);
DETREP_API detrep_status detrep_poly_reverse(const detrep_poly* p, const unsigned* n, size_t len,
                                             detrep_poly** out);
DETREP_API detrep_status detrep_poly_add(const detrep_poly* a, const detrep_poly* b,
                                         detrep_poly** out);
DETREP_API detrep_status detrep_poly_mul(const detrep_poly* a, const detrep_poly* b,
                                         detrep_poly** out);
DETREP_API detrep_status detrep_poly_scale(const detrep_poly* a, double re, double im,
                                           detrep_poly** out);

/* ---- matrices ----------------------------------------------------------- */

DETREP_API detrep_status detrep_matrix_from_json(const char* json, detrep_matrix** out);
DETREP_API detrep_status detrep_matrix_to_json(const detrep_matrix* m, char** out);
DETREP_API void detrep_matrix_free(detrep_matrix* m);
DETREP_API detrep_status detrep_op_norm(const detrep_matrix* m, double* out);

/* ---- representations ---------------------------------------------------- */

DETREP_API detrep_status detrep_representation_from_json(const char* json,
                                                         detrep_representation** out);
DETREP_API detrep_status detrep_representation_to_json(const detrep_representation* r, char** out);
DETREP_API void detrep_representation_free(detrep_representation* r);

/* ---- operations ---------------------------------------------------------- */

/* det(I - K Z_n) expanded into a polynomial. */
DETREP_API detrep_status detrep_det_expand(const detrep_representation* rep, detrep_poly** out);

DETREP_API detrep_status detrep_represent_unconstrained(const detrep_poly* p, int prune,
                                                        detrep_representation** out);

/* Random-restart local search over block-diagonal similarities; lowers ||K||
 * without changing det(I - K Z_n). No optimality claim. */
DETREP_API detrep_status detrep_reduce_norm(const detrep_representation* rep, int restarts,
                                            int iterations, detrep_representation** out);

/* Bounded construction report: representation JSON plus beta, kappa, bound. */
DETREP_API detrep_status detrep_represent_bounded(const detrep_poly* p, char** json_out);

/* a_json: JSON array of coefficients, each a number, a rational string, or a
 * [re, im] pair. mode: 0 = exact when representable, 1 = require exact,
 * 2 = float. */
DETREP_API detrep_status detrep_represent_affine(const char* a_json, int mode,
                                                 detrep_representation** out);

/* Verdicts live in the report; status stays DETREP_OK on a clean run. */
DETREP_API detrep_status detrep_verify(const detrep_poly* p, const detrep_representation* rep,
                                       double tol, int assert_semistable, char** report_json);

DETREP_API detrep_status detrep_pmrp_check(const detrep_matrix* k, const unsigned* n, size_t n_len,
                                           const detrep_poly* target, const unsigned* m,
                                           size_t m_len, double tol, char** report_json);

DETREP_API detrep_status detrep_stability_radius(const detrep_poly* p, long budget,
                                                 char** report_json);

DETREP_API detrep_status detrep_sup_norm(const detrep_poly* p, int grid, int refine,
                                         char** report_json);

DETREP_API detrep_status detrep_inner_eval_rational(const detrep_poly* p, const unsigned* n,
                                                    size_t len, const double* z_re,
                                                    const double* z_im, double* out_re,
                                                    double* out_im);

DETREP_API detrep_status detrep_inner_eval_julia(const detrep_matrix* k, const unsigned* n,
                                                 size_t len, const double* z_re,
                                                 const double* z_im, double* out_re,
                                                 double* out_im);

/* Torus inner-ness samples, plus the Julia/rational identity when a
 * contractive representation is supplied (k may be NULL). */
DETREP_API detrep_status detrep_inner_check(const detrep_poly* p, const unsigned* n, size_t len,
                                            const detrep_matrix* k, int samples, double tol,
                                            char** report_json);

DETREP_API detrep_status detrep_extract_k(const detrep_poly* p, const char* realization_json,
                                          int samples, double tol, detrep_representation** out);

/* tuples_json: {"tuples": [<tuple>, ...]} or a bare array of tuples. */
DETREP_API detrep_status detrep_agler_lower_bound(const detrep_poly* p, const char* tuples_json,
                                                  double* out);

DETREP_API detrep_status detrep_cd_matrix(double t_re, double t_im, int d, char** report_json);

/* t given as a rational string; emits the exact matrix plus the float
 * minimal eigenvalue. */
DETREP_API detrep_status detrep_cd_matrix_exact(const char* t, int d, char** report_json);

DETREP_API detrep_status detrep_kvh_report(int d, double s, int grid, char** report_json);
DETREP_API detrep_status detrep_kvh_optimal(char** report_json);
DETREP_API detrep_status detrep_kvh_example(double r, long budget, char** report_json);
DETREP_API detrep_status detrep_kvh_poly(int d, double s, detrep_poly** out);

#ifdef __cplusplus
}
#endif

#endif /* DETREP_H */
