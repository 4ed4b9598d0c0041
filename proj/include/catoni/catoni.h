/*
 * C API for the catoni library: robust mean estimation under a finite
 * alpha-th moment with alpha in (1, 2), deviation bounds for the estimator
 * and the empirical mean, the explicit heavy-tailed sample laws behind those
 * bounds, and truncated-loss l1 regression with an excess-risk certificate.
 *
 * Every fallible function returns a catoni_status; outputs travel through
 * pointers. On failure, catoni_last_error() describes what went wrong for
 * the calling thread. Handles are opaque and freed by their *_free function.
 */

#ifndef CATONI_CATONI_H
#define CATONI_CATONI_H

#include <stdint.h>

#ifndef CATONI_API
#if defined(__GNUC__) || defined(__clang__)
#define CATONI_API __attribute__((visibility("default")))
#else
#define CATONI_API
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum catoni_status {
  CATONI_OK = 0,
  CATONI_ERR_INTERNAL = 1,  /* unexpected failure */
  CATONI_ERR_INVALID = 2,   /* invalid argument or parameter domain */
  CATONI_ERR_CONDITION = 3, /* a named hypothesis of a guarantee fails */
  CATONI_ERR_PARSE = 4      /* malformed CSV/JSON input */
} catoni_status;

/* Message for the most recent failure on this thread; empty string if none. */
CATONI_API const char* catoni_last_error(void);

CATONI_API const char* catoni_version(void);

/* Frees strings returned by catoni_* functions documented as malloc'd. */
CATONI_API void catoni_string_free(char* text);

/* --- influence function ------------------------------------------------- */

CATONI_API catoni_status catoni_phi_widest(double x, double alpha, double* out);
CATONI_API catoni_status catoni_phi_envelope(double x, double alpha, double* lower, double* upper);

/* --- sample batches and the M-estimator ---------------------------------- */

typedef struct catoni_batch catoni_batch;

CATONI_API catoni_batch* catoni_batch_from_values(const double* values, int64_t n);
/* One value per line; has_header skips the first non-blank line. */
CATONI_API catoni_batch* catoni_batch_from_csv(const char* path, int has_header);
CATONI_API void catoni_batch_free(catoni_batch* batch);
CATONI_API int64_t catoni_batch_size(const catoni_batch* batch);
CATONI_API catoni_status catoni_batch_mean(const catoni_batch* batch, double* out);
/* Heuristic plug-in for v: empirical alpha-th central moment about the
 * empirical median. Outside the deviation guarantees. */
CATONI_API catoni_status catoni_batch_plugin_v(const catoni_batch* batch, double alpha, double* out);

/* (1/(beta n)) sum_i phi(beta (x_i - theta)). */
CATONI_API catoni_status catoni_criterion_r(const catoni_batch* batch, double theta, double beta,
                                 double alpha, double* out);
/* Root of the criterion. tol <= 0 selects 1e-10 * max(1, IQR). */
CATONI_API catoni_status catoni_solve_theta_hat(const catoni_batch* batch, double beta, double alpha,
                                     double tol, double* out);

/* beta = (1/2) (2 alpha log(1/eps) / (n v))^(1/alpha). */
CATONI_API catoni_status catoni_tune_beta(double alpha, double v, int64_t n, double epsilon, double* out);
/* Deviation radius of theta_hat at confidence 1 - 2 eps (tuned beta).
 * Fails with CATONI_ERR_CONDITION naming "assu" when n is too small. */
CATONI_API catoni_status catoni_deviation_bound(double alpha, double v, int64_t n, double epsilon,
                                     double* out);

typedef struct catoni_conditions {
  int assu_ok;      /* n large enough for the deviation bound to hold */
  int exisineq_ok;  /* beta small enough for the envelope roots to exist */
  int exisineq2_ok; /* stronger form localizing the roots within distance 1 */
  int en_ok;        /* eps < 1/(3e) and n >= 2 (lower-bound hypothesis) */
} catoni_conditions;

CATONI_API catoni_status catoni_check_conditions(double alpha, double v, int64_t n, double epsilon,
                                      double beta, catoni_conditions* out);

/* Deterministic envelopes of the criterion around the true mean m. */
CATONI_API catoni_status catoni_b_plus(double theta, double alpha, double v, int64_t n, double epsilon,
                            double beta, double m, double* out);
CATONI_API catoni_status catoni_b_minus(double theta, double alpha, double v, int64_t n, double epsilon,
                             double beta, double m, double* out);
/* Largest root of B- = 0 and smallest root of B+ = 0; requires exisineq2. */
CATONI_API catoni_status catoni_theta_plus_minus(double alpha, double v, int64_t n, double epsilon,
                                      double beta, double m, double* theta_minus,
                                      double* theta_plus);

/* --- empirical-mean deviation bounds ------------------------------------- */

CATONI_API catoni_status catoni_empirical_mean_upper(double alpha, double v, int64_t n, double epsilon,
                                          double* out);
/* Requires eps < 1/(3e) and n >= 2; fails with CATONI_ERR_CONDITION "en". */
CATONI_API catoni_status catoni_empirical_mean_lower(double alpha, double v, int64_t n, double epsilon,
                                          double* out);

typedef struct catoni_bound_report catoni_bound_report;

/* Inclusive epsilon grid start:step:end; every point must satisfy all three
 * bound hypotheses. */
CATONI_API catoni_bound_report* catoni_figure_curves(double alpha, double v, int64_t n, double start,
                                          double step, double end);
CATONI_API void catoni_bound_report_free(catoni_bound_report* report);
CATONI_API int64_t catoni_bound_report_rows(const catoni_bound_report* report);
CATONI_API catoni_status catoni_bound_report_row(const catoni_bound_report* report, int64_t index,
                                      double* epsilon, double* m_estimator_bound,
                                      double* empirical_upper, double* empirical_lower);
/* CSV with header epsilon,m_estimator_bound,empirical_upper,empirical_lower,
 * 17 significant digits. Malloc'd; free with catoni_string_free. */
CATONI_API char* catoni_bound_report_csv(const catoni_bound_report* report);

/* --- heavy-tailed sample laws --------------------------------------------- */

typedef struct catoni_law catoni_law;

/* {"kind":"symmetric_pareto","alpha":...} or
 * {"kind":"worst_case","alpha":...,"v":...,"n":...,"eta":...,"gamma":...};
 * gamma defaults to (alpha+2)/2. */
CATONI_API catoni_law* catoni_law_from_json(const char* json);
CATONI_API catoni_law* catoni_law_pareto(double alpha);
CATONI_API catoni_law* catoni_law_worst_case(double alpha, double v, int64_t n, double eta, double gamma);
CATONI_API void catoni_law_free(catoni_law* law);
/* Malloc'd; free with catoni_string_free. */
CATONI_API char* catoni_law_to_json(const catoni_law* law);

CATONI_API catoni_status catoni_law_alpha(const catoni_law* law, double* out);
CATONI_API catoni_status catoni_law_v(const catoni_law* law, double* out);
CATONI_API catoni_status catoni_law_mean(const catoni_law* law, double* out);
CATONI_API catoni_status catoni_law_cdf(const catoni_law* law, double x, double* out);
/* Deviations of the law's closed-form (E X, E|X|^alpha) from (0, v). */
CATONI_API catoni_status catoni_law_moment_errors(const catoni_law* law, double* mean_err,
                                       double* alpha_moment_err);
/* Fills out[0..count) with draws from the stream seeded by `seed`. */
CATONI_API catoni_status catoni_law_sample(const catoni_law* law, uint64_t seed, int64_t count,
                                double* out);

/* --- Monte Carlo validation ------------------------------------------------ */

typedef struct catoni_simulation_result {
  int64_t trials;
  double beta;
  double m_estimator_bound;
  double empirical_upper;
  double empirical_lower_eta;
  int64_t exceed_m_estimator;
  int64_t exceed_empirical_upper;
  int64_t exceed_empirical_lower;
} catoni_simulation_result;

/* Trial t draws n samples with stream seed (seed XOR t); results are
 * identical for every thread count. threads <= 0 uses all cores. */
CATONI_API catoni_status catoni_simulate(const catoni_law* law, int64_t n, double epsilon, int64_t trials,
                              uint64_t seed, int threads, catoni_simulation_result* out);

/* --- truncated-loss l1 regression ----------------------------------------- */

typedef struct catoni_problem catoni_problem;

CATONI_API catoni_problem* catoni_problem_from_arrays(const double* xs_row_major, const double* ys,
                                           int64_t n, int64_t d, double radius_r);
/* Rows x_1,...,x_d,y; the column count is fixed by the first data row. */
CATONI_API catoni_problem* catoni_problem_from_csv(const char* path, int has_header, double radius_r);
CATONI_API void catoni_problem_free(catoni_problem* problem);
CATONI_API int64_t catoni_problem_n(const catoni_problem* problem);
CATONI_API int64_t catoni_problem_d(const catoni_problem* problem);

/* (1/(n beta)) sum_i phi(beta |y_i - x_i^T theta|); theta has d entries. */
CATONI_API catoni_status catoni_truncated_risk(const catoni_problem* problem, const double* theta,
                                    double beta, double alpha, double* out);

/* d log(6 radius_r / epsilon_net). */
CATONI_API catoni_status catoni_covering_number_log(int64_t d, double radius_r, double epsilon_net,
                                         double* out);
/* ((covering_log + 2 log(1/delta)) / n)^(1/alpha). */
CATONI_API catoni_status catoni_tune_beta_regression(int64_t n, double covering_log, double delta,
                                          double alpha, double* out);

typedef struct catoni_moments {
  double e_abs_x;       /* E |x| */
  double e_abs_x_alpha; /* E |x|^alpha */
  double sup_r_alpha;   /* upper bound on sup_theta E|y - x^T theta|^alpha */
} catoni_moments;

/* Sample-average plug-in for the certificate moments (no guarantee). */
CATONI_API catoni_status catoni_problem_empirical_moments(const catoni_problem* problem, double alpha,
                                               catoni_moments* out);

typedef struct catoni_certificate {
  double bound_value; /* net_term + moment_term + log_term */
  double net_term;
  double moment_term;
  double log_term;
  double covering_log;
  double beta_used;
} catoni_certificate;

/* Certificate at net resolution epsilon_net (pass 1/n for the standard
 * d log(6 n r) form). */
CATONI_API catoni_status catoni_excess_risk_bound(const catoni_moments* moments, double alpha, double delta,
                                       int64_t n, int64_t d, double radius_r, double epsilon_net,
                                       catoni_certificate* out);

/* Multi-start projected minimization of the truncated risk. theta_out must
 * hold d doubles. max_risk_evals <= 0 selects the default budget. */
CATONI_API catoni_status catoni_minimize_truncated_risk(const catoni_problem* problem, double alpha,
                                             double beta, uint64_t seed, int64_t max_risk_evals,
                                             double* theta_out, double* risk_out,
                                             int* budget_exhausted);

/* Pipeline: epsilon_net = 1/n, tuned beta, minimization, certificate.
 * `moments` may be NULL to use the empirical plug-in; `budget_exhausted`
 * (nullable) reports whether the optimizer ran out of risk evaluations. */
CATONI_API catoni_status catoni_regress(const catoni_problem* problem, double alpha, double delta,
                             const catoni_moments* moments, uint64_t seed, double* theta_out,
                             catoni_certificate* cert_out, int* budget_exhausted);

/* --- synthetic regression laws --------------------------------------------- */

typedef struct catoni_reglaw catoni_reglaw;

/* {"kind":"planted_regression","theta_star":[...],"x":"rademacher"|"gaussian",
 *  "noise":{"kind":"none"|"rademacher_sign"|"symmetric_lomax","shape":...}} */
CATONI_API catoni_reglaw* catoni_reglaw_from_json(const char* json);
CATONI_API void catoni_reglaw_free(catoni_reglaw* law);
CATONI_API int64_t catoni_reglaw_dim(const catoni_reglaw* law);
/* theta_out must hold dim doubles. */
CATONI_API catoni_status catoni_reglaw_theta_star(const catoni_reglaw* law, double* theta_out);
/* xs_out holds count*dim doubles (row-major), ys_out holds count. */
CATONI_API catoni_status catoni_reglaw_sample(const catoni_reglaw* law, uint64_t seed, int64_t count,
                                   double* xs_out, double* ys_out);
CATONI_API catoni_status catoni_reglaw_moments(const catoni_reglaw* law, double alpha, double radius_r,
                                    catoni_moments* out);
/* Population l1 risk. mc_samples <= 0 requests the closed form (rademacher
 * designs only); otherwise a Monte Carlo surrogate with its standard error. */
CATONI_API catoni_status catoni_reglaw_l1_risk(const catoni_reglaw* law, const double* theta,
                                    int64_t mc_samples, uint64_t seed, double* risk,
                                    double* std_error);
/* Paired surrogate of R(theta) - R(theta_ref) over common draws. */
CATONI_API catoni_status catoni_reglaw_l1_excess(const catoni_reglaw* law, const double* theta,
                                      const double* theta_ref, int64_t mc_samples, uint64_t seed,
                                      double* excess, double* std_error);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CATONI_CATONI_H */
