/* revlab.h - C API for the revival-lab solver library.
 *
 * All functions return REVLAB_OK (0) on success or a nonzero revlab_status;
 * the last error message for the calling thread is available through
 * revlab_last_error(). Objects are opaque handles released with the matching
 * *_free function. Strings returned through char** out-parameters are
 * heap-allocated and released with revlab_string_free().
 */
#ifndef REVLAB_H
#define REVLAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum revlab_status {
    REVLAB_OK = 0,
    REVLAB_ERR_BAD_ARG = 1,
    REVLAB_ERR_BAD_SPEC = 2,
    REVLAB_ERR_OUT_OF_DOMAIN = 3,
    REVLAB_ERR_ILL_POSED = 4,
    REVLAB_ERR_DEGENERATE_SPECTRUM = 5,
    REVLAB_ERR_DEGENERATE_CONSTANTS = 6,
    REVLAB_ERR_INCONSISTENT_ROOT = 7,
    REVLAB_ERR_ROOT_DERIVATIVE_TOO_SMALL = 8,
    REVLAB_ERR_QUADRATURE = 9,
    REVLAB_ERR_GRID_MISMATCH = 10,
    REVLAB_ERR_INSUFFICIENT_RESOLUTION = 11,
    REVLAB_ERR_NOT_RATIONAL = 12,
    REVLAB_ERR_PARSE = 13,
    REVLAB_ERR_IO = 14,
    REVLAB_ERR_INTERNAL = 15
} revlab_status;

typedef struct revlab_bc revlab_bc;           /* boundary conditions */
typedef struct revlab_datum revlab_datum;     /* piecewise-polynomial datum */
typedef struct revlab_spectrum revlab_spectrum;
typedef struct revlab_field revlab_field;     /* sampled solution field */

/* ---- diagnostics of the last failed call (thread local) ---- */
const char* revlab_last_error(void);
void revlab_string_free(char* s);

/* ---- boundary conditions ---- */
revlab_status revlab_bc_pseudoperiodic(double beta0_re, double beta0_im,
                                       double beta1_re, double beta1_im,
                                       double L, revlab_bc** out);
/* coefficient order: b11, b12, b13, b14, b22, b23, b24 as interleaved
 * (re, im) pairs, i.e. coeffs[14]. */
revlab_status revlab_bc_general(const double coeffs[14], double L, revlab_bc** out);
int revlab_bc_energy_conserving(const revlab_bc* bc);
void revlab_bc_free(revlab_bc* bc);

/* ---- initial data ---- */
revlab_status revlab_datum_box(const revlab_bc* bc, double a, double b,
                               double height_re, double height_im, revlab_datum** out);
revlab_status revlab_datum_ramp(const revlab_bc* bc, double center, double halfwidth,
                                double slope_re, double slope_im,
                                double offset_re, double offset_im, revlab_datum** out);
revlab_status revlab_datum_polybump(const revlab_bc* bc, double a, double b,
                                    revlab_datum** out);
/* segments_json: [{"lo":..,"hi":..,"coeffs":[{"re":..,"im":..},...]},...] */
revlab_status revlab_datum_segments_json(const revlab_bc* bc, const char* segments_json,
                                         revlab_datum** out);
revlab_status revlab_datum_eval(const revlab_datum* d, double x,
                                double* re, double* im);
void revlab_datum_free(revlab_datum* d);

/* ---- spectrum ---- */
revlab_status revlab_spectrum_compute(const revlab_bc* bc, int pair_count,
                                      revlab_spectrum** out);
size_t revlab_spectrum_root_count(const revlab_spectrum* s);
/* index, kappa, Delta'(kappa), class name (static string), mirrored flag */
revlab_status revlab_spectrum_root(const revlab_spectrum* s, size_t i,
                                   int* pair_index, int* mirrored,
                                   double* kappa_re, double* kappa_im,
                                   double* ddelta_re, double* ddelta_im,
                                   const char** class_name);
revlab_status revlab_spectrum_to_json(const revlab_spectrum* s, char** json_out);
revlab_status revlab_discriminant(const revlab_bc* bc, double kappa_re, double kappa_im,
                                  double* out_re, double* out_im);
void revlab_spectrum_free(revlab_spectrum* s);

/* ---- solution fields ---- */
/* grid: n_grid strictly increasing points in [0, L]; nterms: odd >= 3 */
revlab_status revlab_eval_series(const revlab_bc* bc, const revlab_datum* d, double t,
                                 const double* grid, size_t n_grid, int nterms,
                                 revlab_field** out);
revlab_status revlab_eval_residue(const revlab_bc* bc, const revlab_datum* d, double t,
                                  const double* grid, size_t n_grid, int nterms,
                                  revlab_field** out);
/* closed-form revival at t = (L^2/4pi)(p/q); pseudoperiodic only */
revlab_status revlab_eval_revival(const revlab_bc* bc, const revlab_datum* d,
                                  long long p, long long q,
                                  const double* grid, size_t n_grid,
                                  revlab_field** out);
size_t revlab_field_size(const revlab_field* f);
revlab_status revlab_field_get(const revlab_field* f, size_t i,
                               double* x, double* re, double* im);
revlab_status revlab_field_write_csv(const revlab_field* f, const char* path);
void revlab_field_free(revlab_field* f);

/* ---- diagnostics ---- */
revlab_status revlab_field_energy(const revlab_field* f, double* out);
revlab_status revlab_field_compare(const revlab_field* a, const revlab_field* b,
                                   double* l2, double* sup);
revlab_status revlab_field_box_dimension(const revlab_field* f,
                                         double* dimension, double* r_squared);
/* writes up to cap breakpoints; *count receives the total found */
revlab_status revlab_field_breakpoints(const revlab_field* f, double tol,
                                       double* xs, size_t cap, size_t* count);

/* ---- scenario front end (the CLI surface) ---- */
/* Returns the process exit code (0 ok, 2 grid mismatch, 1 other errors);
 * on failure *error_json receives {"error":{"code":...,"message":...}}. */
int revlab_run_scenario(const char* path, char** error_json);
revlab_status revlab_compare_csv(const char* path_a, const char* path_b,
                                 char** report_json);
revlab_status revlab_spectrum_json_for_bc_file(const char* bc_json_path, int pair_count,
                                               char** json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* REVLAB_H */
