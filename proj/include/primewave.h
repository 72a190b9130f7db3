/* primewave C API: prime trigonometric series evaluation and analysis.
 *
 * All functions return pw_status (PW_OK on success) and write results through
 * out-parameters. Failure details are retrievable per thread with
 * pw_last_error(). Handles are opaque and freed with their pw_*_free call.
 */
#ifndef PRIMEWAVE_H
#define PRIMEWAVE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pw_status {
  PW_OK = 0,
  PW_ERR_DOMAIN = 1,
  PW_ERR_RESOLUTION = 2,
  PW_ERR_CONSISTENCY = 3,
  PW_ERR_INSUFFICIENT_TABLE = 4,
  PW_ERR_DIVERGENCE = 5,
  PW_ERR_INTERNAL = 6
} pw_status;

typedef struct pw_prime_table pw_prime_table;
typedef struct pw_graph pw_graph;

const char* pw_version(void);
const char* pw_status_name(pw_status status);
/* message of the calling thread's most recent failure; empty string if none */
const char* pw_last_error(void);

/* ----- primes ----- */
pw_status pw_sieve(uint64_t limit, pw_prime_table** out);
void pw_prime_table_free(pw_prime_table* table);
uint64_t pw_prime_count(const pw_prime_table* table);
uint64_t pw_prime_limit(const pw_prime_table* table);
/* primes are indexed 0..count-1, ascending */
pw_status pw_prime_at(const pw_prime_table* table, uint64_t index,
                      uint64_t* out);
pw_status pw_prime_gaps(const pw_prime_table* table, uint64_t* out,
                        size_t capacity, size_t* written);
/* sizes of the residue classes mod q; counts has q slots */
pw_status pw_residue_class_sizes(const pw_prime_table* table, uint64_t q,
                                 uint64_t* counts);

/* ----- zeta ----- */
typedef enum pw_zeta_method {
  PW_ZETA_DIRECT_SUM = 0,
  PW_ZETA_MOEBIUS_FORMULA = 1,
  PW_ZETA_ASYMPTOTIC = 2
} pw_zeta_method;

typedef struct pw_zeta_eval {
  double value;
  uint64_t truncation_bound;
  double tail_estimate;
  pw_zeta_method method;
} pw_zeta_eval;

pw_status pw_riemann_zeta(double s, double* out);
pw_status pw_moebius(uint64_t n, int* out);
pw_status pw_prime_zeta(double alpha, const pw_prime_table* table,
                        pw_zeta_eval* out);
pw_status pw_log_integral(double x, double* out);
pw_status pw_partial_prime_power_sum(double alpha, const pw_prime_table* table,
                                     uint64_t n, double* out);
double pw_mertens_constant(void);

/* ----- series ----- */
typedef enum pw_component {
  PW_COMPONENT_COMPLEX = 0,
  PW_COMPONENT_REAL = 1,
  PW_COMPONENT_IMAG = 2
} pw_component;

typedef struct pw_series_params {
  double alpha;
  double beta;
  uint64_t n_max;
  pw_component component;
} pw_series_params;

pw_status pw_eval_v(const pw_series_params* params,
                    const pw_prime_table* table, double t, double* out_re,
                    double* out_im);
pw_status pw_eval_v_derivative(const pw_series_params* params,
                               const pw_prime_table* table, double t,
                               int order, double* out_re, double* out_im);
pw_status pw_sample_graph(const pw_series_params* params,
                          const pw_prime_table* table, double t_start,
                          double t_end, uint64_t points, pw_graph** out);
pw_status pw_weierstrass(double a, double b, int terms, double t, double* out);
pw_status pw_riemann_series(double alpha, int terms, double t, double* out);

/* graphs from external data; im may be NULL for real-valued samples */
pw_status pw_graph_create(double t_start, double t_end, uint64_t points,
                          const double* re, const double* im, pw_graph** out);
void pw_graph_free(pw_graph* graph);
uint64_t pw_graph_points(const pw_graph* graph);
double pw_graph_t_start(const pw_graph* graph);
double pw_graph_t_end(const pw_graph* graph);
/* copies the samples; each buffer needs pw_graph_points slots */
pw_status pw_graph_copy(const pw_graph* graph, double* re, double* im);

/* ----- regularity ----- */
pw_status pw_gabor_transform(const pw_graph* graph, double a, double b,
                             double lambda, double* out_re, double* out_im);
pw_status pw_theta_gap(const pw_prime_table* table, double beta,
                       uint64_t index, double* out);

typedef struct pw_holder_estimate {
  double location;
  double exponent;
  double ci_halfwidth;
  uint64_t scales_used;
  double scale_min;
  double scale_max;
  int degenerate;
  int differentiable_regime;
} pw_holder_estimate;

/* scales == NULL selects the default ladder 2^-4 .. 2^-12 */
pw_status pw_holder_oscillation(const pw_graph* graph, double t0,
                                const double* scales, size_t n_scales,
                                pw_holder_estimate* out);

typedef struct pw_holder_bound_row {
  uint64_t index;
  uint64_t prime;
  double theta;
  double gabor_abs;
  double identity_ratio;
  double implied_bound;
} pw_holder_bound_row;

pw_status pw_holder_upper_bound(const pw_series_params* params,
                                const pw_prime_table* table,
                                const uint64_t* m_list, size_t n_m, double t0,
                                pw_holder_bound_row* rows,
                                double* alpha_over_beta, double* min_bound);

/* ----- fractal ----- */
typedef struct pw_boxdim_result {
  double dimension;
  double fit_r2;
  double box_t0, box_t1, box_y0, box_y1;
  int resolution_warning;
  int range_flag;
} pw_boxdim_result;

pw_status pw_box_count(const pw_graph* graph, uint32_t n, uint64_t* out);
/* occupied receives one count per grid size */
pw_status pw_box_dimension(const pw_graph* graph, const uint32_t* grid_sizes,
                           size_t n_grids, pw_boxdim_result* out,
                           uint64_t* occupied);

/* ----- selfsim ----- */
/* sums receives q reciprocal class sums R_{l,q}, l = 0..q-1 */
pw_status pw_residue_sums(const pw_prime_table* table, uint64_t q, uint64_t n,
                          double* sums, double* predicted);
pw_status pw_value_at_reciprocal(const pw_prime_table* table, uint64_t q,
                                 uint64_t n, double* direct,
                                 double* residue_route);

typedef struct pw_affine_residual {
  double rms;
  double max_abs;
  double value_range;
  double normalized_rms;
} pw_affine_residual;

pw_status pw_affine_similarity_residual(const pw_prime_table* table,
                                        uint64_t q, uint64_t n,
                                        uint64_t points,
                                        pw_affine_residual* out);

/* ----- stochastic ----- */
typedef enum pw_walk_family {
  PW_FAMILY_POWERS_OF_TWO = 0,
  PW_FAMILY_INTEGERS = 1,
  PW_FAMILY_PRIMES = 2,
  PW_FAMILY_PRIME_POWERS = 3
} pw_walk_family;

typedef enum pw_angular {
  PW_ANGULAR_PI = 0,
  PW_ANGULAR_TWO_PI = 1
} pw_angular;

typedef enum pw_clt_normalization {
  PW_NORM_BY_N = 0,
  PW_NORM_BY_SQRT_N = 1
} pw_clt_normalization;

/* out receives n_terms partial sums; table may be NULL for non-prime families */
pw_status pw_walk(pw_walk_family family, double beta, uint64_t n_terms,
                  double x, pw_angular angular, const pw_prime_table* table,
                  double* out);

typedef struct pw_clt_report {
  uint64_t n_samples;
  uint64_t n_terms;
  uint64_t seed;
  pw_clt_normalization normalization;
  double mean;
  double variance;
  double skewness;
  double excess_kurtosis;
  double jarque_bera;
  uint64_t bins;
} pw_clt_report;

/* bin_centers/bin_counts need ceil(sqrt(n_samples)) slots; either may be NULL */
pw_status pw_clt_experiment(pw_walk_family family, double beta,
                            uint64_t n_terms, uint64_t n_samples,
                            pw_clt_normalization normalization, uint64_t seed,
                            pw_angular angular, const pw_prime_table* table,
                            pw_clt_report* out, double* bin_centers,
                            uint64_t* bin_counts);

/* flags needs length-1 slots; overall set to 1 when every ratio passes */
pw_status pw_hadamard_check(const uint64_t* sequence, size_t length,
                            double rho, uint8_t* flags, int* overall,
                            int64_t* first_fail);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PRIMEWAVE_H */
