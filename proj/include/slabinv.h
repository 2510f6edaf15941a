/* slabinv — C API for the two-layer slab invisibility library.
 *
 * Exact scattering data for a planar slab made of two equal-thickness layers
 * with complex refractive indices, plus solvers for unidirectionally and
 * bidirectionally invisible configurations.
 *
 * All functions return slabinv_status; outputs go through pointers. Handles
 * returned by the scan and solver entry points are opaque and must be
 * released with their matching free function. Strings returned through
 * char** must be released with slabinv_string_free. On error,
 * slabinv_last_error() returns a thread-local description of the most
 * recent failure.
 */

#ifndef SLABINV_H
#define SLABINV_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum slabinv_status {
    SLABINV_OK = 0,
    SLABINV_ERR_INVALID_INPUT = 2, /* bad arguments, domain violations */
    SLABINV_ERR_NO_SOLUTIONS = 3,  /* solver ran clean but found nothing */
    SLABINV_ERR_RANGE = 4,         /* numeric overflow guard tripped */
    SLABINV_ERR_SINGULAR = 5,      /* spectral singularity (m22 = 0) */
    SLABINV_ERR_IO = 6,
    SLABINV_ERR_INTERNAL = 7
} slabinv_status;

typedef struct slabinv_complex {
    double re, im;
} slabinv_complex;

/* Two-layer slab: n1 fills the left half, n2 the right half. Thickness is
 * used only to convert between K and physical wavelength. */
typedef struct slabinv_config {
    slabinv_complex n1, n2;
    double thickness_um;
} slabinv_config;

typedef struct slabinv_matrix {
    slabinv_complex m11, m12, m21, m22;
} slabinv_matrix;

typedef struct slabinv_scattering {
    slabinv_complex t, rl, rr; /* transmission, left/right reflection amplitudes */
    double t2, rl2, rr2;       /* squared moduli */
} slabinv_scattering;

typedef struct slabinv_aux {
    slabinv_complex n_plus, n_minus, n_tilde_plus, n_tilde_minus, a_plus, a_minus;
} slabinv_aux;

typedef struct slabinv_residuals {
    slabinv_complex r_m21, r_m12, r_m11, r_m22; /* m21, m12, m11-1, m22-1 */
} slabinv_residuals;

typedef enum slabinv_side {
    SLABINV_SIDE_NONE = 0,
    SLABINV_SIDE_LEFT,
    SLABINV_SIDE_RIGHT,
    SLABINV_SIDE_BOTH,
    SLABINV_SIDE_INDETERMINATE
} slabinv_side;

const char* slabinv_version(void);

/* Thread-local message for the most recent error in this thread. */
const char* slabinv_last_error(void);

void slabinv_string_free(char* str);

/* ---- scattering core ---------------------------------------------------- */

slabinv_status slabinv_aux_quantities(const slabinv_config* config, double K,
                                      slabinv_aux* out);

slabinv_status slabinv_transfer_matrix(const slabinv_config* config, double K,
                                       slabinv_matrix* out);

slabinv_status slabinv_scattering_data(const slabinv_matrix* m, slabinv_scattering* out);

slabinv_status slabinv_scattering_at(const slabinv_config* config, double K,
                                     slabinv_scattering* out);

slabinv_status slabinv_pt_transform(const slabinv_config* config, slabinv_config* out);

slabinv_status slabinv_time_reverse(const slabinv_config* config, slabinv_config* out);

slabinv_status slabinv_invisibility_residuals(const slabinv_config* config, double K,
                                              slabinv_residuals* out);

slabinv_status slabinv_classify(const slabinv_config* config, double K, slabinv_side* out);

/* Max entrywise |M(PT(c)) - conj(M(c)^-1)|. */
slabinv_status slabinv_verify_pt_rule(const slabinv_config* config, double K,
                                      double* deviation);

slabinv_status slabinv_wavelength_nm(double K, double thickness_um, double* out);

/* nonzero iff both layers have Re(n) >= 1 */
int slabinv_physically_admissible(const slabinv_config* config);

/* ---- PT-symmetric solver ------------------------------------------------ */

typedef struct slabinv_pt_solution {
    double eta, kappa, K;
    slabinv_side side;
    double residual1, residual2; /* exact equations at the solution */
    double approx_K, approx_kappa;
} slabinv_pt_solution;

typedef struct slabinv_pt_solutions slabinv_pt_solutions; /* opaque */

/* Scan (K_lo, K_hi) for PT-symmetric invisible points with the requested
 * gain orientation (kappa_sign < 0: gain in the left layer). Returns
 * SLABINV_ERR_NO_SOLUTIONS when the window is clean but empty. */
slabinv_status slabinv_pt_scan(double eta, double k_lo, double k_hi, double kappa_sign,
                               slabinv_pt_solutions** out);

size_t slabinv_pt_solutions_count(const slabinv_pt_solutions* solutions);

slabinv_status slabinv_pt_solutions_get(const slabinv_pt_solutions* solutions, size_t index,
                                        slabinv_pt_solution* out);

void slabinv_pt_solutions_free(slabinv_pt_solutions* solutions);

slabinv_status slabinv_pt_exact_residuals(double eta, double kappa, double K,
                                          double* r1, double* r2);

slabinv_status slabinv_pt_kappa_of(double eta, double K, double sign, double* out);

/* K bound (2/|kappa|) ln(2 eta/|kappa|); +inf for kappa = 0. */
slabinv_status slabinv_pt_kappa_bound(double eta, double kappa, double* out);

/* ---- non-PT constructor -------------------------------------------------- */

typedef struct slabinv_nonpt_seed {
    int m_plus, m_minus, m0;
    double gamma0;
} slabinv_nonpt_seed;

typedef struct slabinv_nonpt_solution {
    slabinv_nonpt_seed seed;
    double y_plus, y_minus;
    double gamma_plus, gamma_minus;
    double x_plus, x_minus;
    double K;
    slabinv_config config;
    slabinv_side side;
    slabinv_scattering validation;
} slabinv_nonpt_solution;

slabinv_status slabinv_nonpt_seed_from_targets(double eta1, double eta2, double k_target,
                                               double gamma0, slabinv_nonpt_seed* out);

int slabinv_nonpt_seed_feasible(const slabinv_nonpt_seed* seed);

/* side must be SLABINV_SIDE_LEFT or SLABINV_SIDE_RIGHT. */
slabinv_status slabinv_nonpt_build(const slabinv_nonpt_seed* seed, slabinv_side side,
                                   slabinv_nonpt_solution* out);

slabinv_status slabinv_nonpt_exact_residuals(double x_plus, double x_minus, double y_plus,
                                             double y_minus, double K, double out[4]);

/* ---- bidirectional constructor ------------------------------------------ */

slabinv_status slabinv_bidirectional_config(int m, int m1, int m2, double thickness_um,
                                            slabinv_config* out_config, double* out_K,
                                            double* out_lambda_nm);

slabinv_status slabinv_is_half_integer_resonance(double K, int* out);

/* ---- integration oracle -------------------------------------------------- */

slabinv_status slabinv_oracle_matrix(const slabinv_config* config, double K, size_t steps,
                                     slabinv_matrix* out);

slabinv_status slabinv_oracle_deviation(const slabinv_config* config, double K, size_t steps,
                                        double* out);

/* ---- scans, bands, duality ----------------------------------------------- */

typedef struct slabinv_scan_row {
    double K, lambda_nm, t2m1, arg_t, rl2, rr2;
} slabinv_scan_row;

typedef struct slabinv_scan slabinv_scan; /* opaque */

slabinv_status slabinv_scan_run(const slabinv_config* config, double k_lo, double k_hi,
                                size_t samples, slabinv_scan** out);

size_t slabinv_scan_rows(const slabinv_scan* scan);

slabinv_status slabinv_scan_get(const slabinv_scan* scan, size_t index,
                                slabinv_scan_row* out);

/* CSV bytes, header "K,lambda_nm,T2m1,argT,Rl2,Rr2"; identical inputs yield
 * identical bytes. Free with slabinv_string_free. */
slabinv_status slabinv_scan_csv(const slabinv_scan* scan, char** out);

slabinv_status slabinv_scan_write_csv(const slabinv_scan* scan, const char* path);

void slabinv_scan_free(slabinv_scan* scan);

typedef struct slabinv_band {
    double lambda_min_nm, lambda_max_nm, width_nm, threshold;
    int empty;
} slabinv_band;

slabinv_status slabinv_reflectionless_band(const slabinv_config* config, double lambda_lo_nm,
                                           double lambda_hi_nm, double threshold,
                                           size_t samples, slabinv_band* out);

typedef struct slabinv_duality_report {
    slabinv_side original, pt_transformed, conjugated;
    double pt_rule_deviation;
    int statement_i_ok;
    double conj_swap_deviation;
    int statement_ii_ok;
} slabinv_duality_report;

slabinv_status slabinv_verify_duality(const slabinv_config* config, double K,
                                      slabinv_duality_report* out);

/* ---- config serialization ------------------------------------------------ */

/* Schema: {"n1": {"re":.., "im":..}, "n2": {"re":.., "im":..}, "L_um": ..} */
slabinv_status slabinv_config_to_json(const slabinv_config* config, char** out);

slabinv_status slabinv_config_from_json(const char* json_text, slabinv_config* out);

slabinv_status slabinv_config_from_json_file(const char* path, slabinv_config* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SLABINV_H */
