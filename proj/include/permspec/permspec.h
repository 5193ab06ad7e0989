/* permspec C API: spectral decisions for (near-)permutation unitaries.
 *
 * The library answers, from trace moments alone, whether a unitary behaves
 * like a permutation matrix: it inverts moment sequences into cycle
 * densities, decides conjugacy-to-permutation with refutation certificates,
 * tests exact membership for finite matrices, builds witness permutations
 * with prescribed cycle densities, and models spectral measures as mixtures
 * of roots-of-unity atoms.
 *
 * Conventions:
 *   - every function returns a ps_status; PS_OK is 0;
 *   - on failure, ps_last_error() returns a thread-local detail message;
 *   - char** outputs receive NUL-terminated strings owned by the caller,
 *     released with ps_string_free();
 *   - handle outputs (ps_matrix**, ps_permutation**) are released with the
 *     matching *_free();
 *   - inputs called "text" accept the matrix JSON format
 *     {"n":..,"re":[[..]],"im":[[..]]} or a one-line permutation
 *     ("1 0 2" style images of 0..n-1), promoted to its matrix.
 */

#ifndef PERMSPEC_PERMSPEC_H
#define PERMSPEC_PERMSPEC_H

#include <stdint.h>

#if defined(_WIN32)
#define PS_API __declspec(dllexport)
#else
#define PS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ps_status {
  PS_OK = 0,
  PS_ERROR_INVALID_ARGUMENT = 1,
  PS_ERROR_PARSE = 2,
  PS_ERROR_NOT_UNITARY = 3,
  PS_ERROR_INSUFFICIENT_MOMENTS = 4,
  PS_ERROR_INVALID_DENSITIES = 5,
  PS_ERROR_NONREAL_MOMENT = 6,
  PS_ERROR_OVERFLOW = 7,
  PS_ERROR_INTERNAL = 8
} ps_status;

PS_API const char* ps_version(void);
PS_API const char* ps_status_name(ps_status status);

/* Thread-local message describing the most recent failure in this thread. */
PS_API const char* ps_last_error(void);

PS_API void ps_string_free(char* s);

/* ---- dense complex matrices -------------------------------------------- */

typedef struct ps_matrix ps_matrix;

PS_API ps_status ps_matrix_parse(const char* text, ps_matrix** out);
PS_API void ps_matrix_free(ps_matrix* m);
PS_API int64_t ps_matrix_dim(const ps_matrix* m);
PS_API ps_status ps_matrix_to_json(const ps_matrix* m, char** json_out);

/* Trace-norm distance of u*u from the identity. */
PS_API ps_status ps_matrix_unitarity_defect(const ps_matrix* m, double* defect_out);

/* Normalized trace moments m_1..m_max_k as {"K":..,"re":[..],"im":[..]}.
 * Fails with PS_ERROR_NOT_UNITARY when the defect exceeds unitary_tol
 * (pass <= 0 for the default 1e-8). */
PS_API ps_status ps_matrix_moments(const ps_matrix* m, int64_t max_k,
                                   double unitary_tol, char** moments_json_out);

/* v m v* for a seeded pseudorandom unitary v; deterministic per seed. */
PS_API ps_status ps_matrix_conjugate_random(const ps_matrix* m, uint64_t seed,
                                            ps_matrix** out);

/* ---- permutations ------------------------------------------------------- */

typedef struct ps_permutation ps_permutation;

PS_API ps_status ps_permutation_parse(const char* line, ps_permutation** out);
PS_API void ps_permutation_free(ps_permutation* p);
PS_API int64_t ps_permutation_size(const ps_permutation* p);
PS_API ps_status ps_permutation_format(const ps_permutation* p, char** line_out);

/* Cycle type as {"cycle_length": multiplicity}. */
PS_API ps_status ps_permutation_cycle_type(const ps_permutation* p, char** json_out);

PS_API ps_status ps_permutation_to_matrix(const ps_permutation* p, ps_matrix** out);

/* ---- decision reports (JSON in, JSON out) ------------------------------- */

/* Unitarity, moments, inverted cycle densities, the conjugacy verdict with
 * certificate, exact membership when max_k covers n, and the recovered
 * spectral mixture.
 *   max_k <= 0            n (the input dimension)
 *   declared_support <= 0 no support promise
 *   tol <= 0              1e-9;  unitary_tol <= 0  1e-8 */
PS_API ps_status ps_analyze(const char* input_text, double tol, double unitary_tol,
                            int64_t max_k, int64_t declared_support, char** report_out);

/* Cycle densities c_1..c_upto from a moment-sequence JSON. */
PS_API ps_status ps_invert(const char* moments_json, int64_t upto, double tol,
                           char** report_out);

/* Witness permutation of {0..n-1} for a densities literal like "2:0.5,3:1/4".
 * Emits the one-line permutation and a report with achieved densities and
 * the leftover cycle length. */
PS_API ps_status ps_construct(const char* densities_spec, int64_t n,
                              char** permutation_line_out, char** report_out);

/* Histogram CSV plus mixture JSON for a mixture ("coeffs") or moment ("K")
 * input. csv_out receives NULL when the moments lie outside the mixture
 * class (report then carries the failing index). */
PS_API ps_status ps_measure(const char* input_text, int64_t bins, int64_t atom_cutoff,
                            double tol, char** csv_out, char** report_out);

/* Built-in inputs: kind is "circulant-pair" (the product c*d; c_json_out and
 * d_json_out, when non-NULL, receive the factors), "cycle" or "identity".
 * root_index <= 0 means 1. */
PS_API ps_status ps_example(const char* kind, int64_t n, int64_t root_index,
                            char** matrix_json_out, char** c_json_out, char** d_json_out);

/* Equal-moments conjugacy test between two inputs (matrix JSON, permutation
 * line, or moment JSON each). max_k <= 0 uses the smaller natural length. */
PS_API ps_status ps_conjtest(const char* a_text, const char* b_text, double tol,
                             int64_t max_k, char** report_out);

#ifdef __cplusplus
}
#endif

#endif /* PERMSPEC_PERMSPEC_H */
