#include "catoni/catoni.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "core/bounds.hpp"
#include "core/distributions.hpp"
#include "core/errors.hpp"
#include "core/io.hpp"
#include "core/mestimator.hpp"
#include "core/regression.hpp"
#include "core/simulate.hpp"

struct catoni_batch {
  catoni::SampleBatch impl;
};

struct catoni_bound_report {
  catoni::BoundReport impl;
};

struct catoni_law {
  catoni::Law impl;
};

struct catoni_problem {
  catoni::RegressionProblem impl;
};

struct catoni_reglaw {
  catoni::PlantedRegressionLaw impl;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

catoni_status status_from_exception() {
  try {
    throw;
  } catch (const catoni::ConditionError& e) {
    set_error(e.what());
    return CATONI_ERR_CONDITION;
  } catch (const catoni::ParseError& e) {
    set_error(e.what());
    return CATONI_ERR_PARSE;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return CATONI_ERR_INVALID;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return CATONI_ERR_INVALID;
  } catch (const std::exception& e) {
    set_error(e.what());
    return CATONI_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return CATONI_ERR_INTERNAL;
  }
}

template <typename Fn>
catoni_status guarded(Fn&& fn) {
  try {
    fn();
    return CATONI_OK;
  } catch (...) {
    return status_from_exception();
  }
}

// Handle factories return NULL on failure and leave the message in
// catoni_last_error, mirroring the status-returning functions.
template <typename Handle, typename Fn>
Handle* make_handle(Fn&& fn) {
  try {
    return new Handle{fn()};
  } catch (...) {
    status_from_exception();
    return nullptr;
  }
}

catoni_status require(bool ok, const char* message) {
  if (ok) return CATONI_OK;
  set_error(message);
  return CATONI_ERR_INVALID;
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) return nullptr;
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* catoni_last_error(void) { return g_last_error.c_str(); }

const char* catoni_version(void) { return "0.1.0"; }

void catoni_string_free(char* text) { std::free(text); }

/* --- influence function ------------------------------------------------- */

catoni_status catoni_phi_widest(double x, double alpha, double* out) {
  if (catoni_status s = require(out != nullptr, "phi_widest: out is NULL")) return s;
  return guarded([&] { *out = catoni::phi_widest(x, alpha); });
}

catoni_status catoni_phi_envelope(double x, double alpha, double* lower, double* upper) {
  if (catoni_status s =
          require(lower != nullptr && upper != nullptr, "phi_envelope: output is NULL")) {
    return s;
  }
  return guarded([&] {
    const catoni::PhiEnvelope env = catoni::phi_envelope(x, alpha);
    *lower = env.lower;
    *upper = env.upper;
  });
}

/* --- sample batches and the M-estimator ---------------------------------- */

catoni_batch* catoni_batch_from_values(const double* values, int64_t n) {
  if (values == nullptr || n < 1) {
    set_error("batch_from_values: values must be non-NULL and n >= 1");
    return nullptr;
  }
  return make_handle<catoni_batch>(
      [&] { return catoni::SampleBatch(std::vector<double>(values, values + n)); });
}

catoni_batch* catoni_batch_from_csv(const char* path, int has_header) {
  if (path == nullptr) {
    set_error("batch_from_csv: path is NULL");
    return nullptr;
  }
  return make_handle<catoni_batch>(
      [&] { return catoni::SampleBatch(catoni::read_sample_csv(path, has_header != 0)); });
}

void catoni_batch_free(catoni_batch* batch) { delete batch; }

int64_t catoni_batch_size(const catoni_batch* batch) {
  return batch == nullptr ? 0 : batch->impl.size();
}

catoni_status catoni_batch_mean(const catoni_batch* batch, double* out) {
  if (catoni_status s =
          require(batch != nullptr && out != nullptr, "batch_mean: NULL argument")) {
    return s;
  }
  return guarded([&] { *out = batch->impl.mean(); });
}

catoni_status catoni_batch_plugin_v(const catoni_batch* batch, double alpha, double* out) {
  if (catoni_status s =
          require(batch != nullptr && out != nullptr, "batch_plugin_v: NULL argument")) {
    return s;
  }
  return guarded([&] { *out = catoni::estimate_v_plugin(batch->impl, alpha); });
}

catoni_status catoni_criterion_r(const catoni_batch* batch, double theta, double beta,
                                 double alpha, double* out) {
  if (catoni_status s =
          require(batch != nullptr && out != nullptr, "criterion_r: NULL argument")) {
    return s;
  }
  return guarded([&] { *out = catoni::criterion_r(theta, batch->impl, beta, alpha); });
}

catoni_status catoni_solve_theta_hat(const catoni_batch* batch, double beta, double alpha,
                                     double tol, double* out) {
  if (catoni_status s =
          require(batch != nullptr && out != nullptr, "solve_theta_hat: NULL argument")) {
    return s;
  }
  return guarded([&] {
    const double effective_tol = tol > 0.0 ? tol : catoni::default_root_tol(batch->impl);
    *out = catoni::solve_theta_hat(batch->impl, beta, alpha, effective_tol);
  });
}

catoni_status catoni_tune_beta(double alpha, double v, int64_t n, double epsilon, double* out) {
  if (catoni_status s = require(out != nullptr, "tune_beta: out is NULL")) return s;
  return guarded([&] { *out = catoni::tune_beta(catoni::AlphaParams(alpha, v), n, epsilon); });
}

catoni_status catoni_deviation_bound(double alpha, double v, int64_t n, double epsilon,
                                     double* out) {
  if (catoni_status s = require(out != nullptr, "deviation_bound: out is NULL")) return s;
  return guarded(
      [&] { *out = catoni::deviation_bound(catoni::AlphaParams(alpha, v), n, epsilon); });
}

catoni_status catoni_check_conditions(double alpha, double v, int64_t n, double epsilon,
                                      double beta, catoni_conditions* out) {
  if (catoni_status s = require(out != nullptr, "check_conditions: out is NULL")) return s;
  return guarded([&] {
    const catoni::Conditions c =
        catoni::check_conditions(catoni::AlphaParams(alpha, v), n, epsilon, beta);
    out->assu_ok = c.assu_ok ? 1 : 0;
    out->exisineq_ok = c.exisineq_ok ? 1 : 0;
    out->exisineq2_ok = c.exisineq2_ok ? 1 : 0;
    out->en_ok = c.en_ok ? 1 : 0;
  });
}

catoni_status catoni_b_plus(double theta, double alpha, double v, int64_t n, double epsilon,
                            double beta, double m, double* out) {
  if (catoni_status s = require(out != nullptr, "b_plus: out is NULL")) return s;
  return guarded([&] {
    const catoni::EstimatorConfig cfg(catoni::AlphaParams(alpha, v), n, epsilon, beta);
    *out = catoni::b_plus(theta, cfg, m);
  });
}

catoni_status catoni_b_minus(double theta, double alpha, double v, int64_t n, double epsilon,
                             double beta, double m, double* out) {
  if (catoni_status s = require(out != nullptr, "b_minus: out is NULL")) return s;
  return guarded([&] {
    const catoni::EstimatorConfig cfg(catoni::AlphaParams(alpha, v), n, epsilon, beta);
    *out = catoni::b_minus(theta, cfg, m);
  });
}

catoni_status catoni_theta_plus_minus(double alpha, double v, int64_t n, double epsilon,
                                      double beta, double m, double* theta_minus,
                                      double* theta_plus) {
  if (catoni_status s = require(theta_minus != nullptr && theta_plus != nullptr,
                                "theta_plus_minus: output is NULL")) {
    return s;
  }
  return guarded([&] {
    const catoni::EstimatorConfig cfg(catoni::AlphaParams(alpha, v), n, epsilon, beta);
    const auto [lo, hi] = catoni::theta_plus_minus(cfg, m);
    *theta_minus = lo;
    *theta_plus = hi;
  });
}

/* --- empirical-mean deviation bounds ------------------------------------- */

catoni_status catoni_empirical_mean_upper(double alpha, double v, int64_t n, double epsilon,
                                          double* out) {
  if (catoni_status s = require(out != nullptr, "empirical_mean_upper: out is NULL")) return s;
  return guarded([&] { *out = catoni::empirical_mean_upper(alpha, v, n, epsilon); });
}

catoni_status catoni_empirical_mean_lower(double alpha, double v, int64_t n, double epsilon,
                                          double* out) {
  if (catoni_status s = require(out != nullptr, "empirical_mean_lower: out is NULL")) return s;
  return guarded([&] { *out = catoni::empirical_mean_lower(alpha, v, n, epsilon); });
}

catoni_bound_report* catoni_figure_curves(double alpha, double v, int64_t n, double start,
                                          double step, double end) {
  return make_handle<catoni_bound_report>([&] {
    return catoni::figure_curves(alpha, v, n, catoni::EpsilonGrid(start, step, end));
  });
}

void catoni_bound_report_free(catoni_bound_report* report) { delete report; }

int64_t catoni_bound_report_rows(const catoni_bound_report* report) {
  return report == nullptr ? 0 : static_cast<int64_t>(report->impl.rows.size());
}

catoni_status catoni_bound_report_row(const catoni_bound_report* report, int64_t index,
                                      double* epsilon, double* m_estimator_bound,
                                      double* empirical_upper, double* empirical_lower) {
  if (catoni_status s = require(report != nullptr, "bound_report_row: report is NULL")) return s;
  if (catoni_status s =
          require(index >= 0 && index < static_cast<int64_t>(report->impl.rows.size()),
                  "bound_report_row: index out of range")) {
    return s;
  }
  const catoni::BoundRow& row = report->impl.rows[static_cast<std::size_t>(index)];
  if (epsilon != nullptr) *epsilon = row.epsilon;
  if (m_estimator_bound != nullptr) *m_estimator_bound = row.m_estimator_bound;
  if (empirical_upper != nullptr) *empirical_upper = row.empirical_upper;
  if (empirical_lower != nullptr) *empirical_lower = row.empirical_lower;
  return CATONI_OK;
}

char* catoni_bound_report_csv(const catoni_bound_report* report) {
  if (report == nullptr) {
    set_error("bound_report_csv: report is NULL");
    return nullptr;
  }
  return copy_string(report->impl.to_csv());
}

/* --- heavy-tailed sample laws --------------------------------------------- */

catoni_law* catoni_law_from_json(const char* json) {
  if (json == nullptr) {
    set_error("law_from_json: json is NULL");
    return nullptr;
  }
  return make_handle<catoni_law>([&] { return catoni::law_from_json(json); });
}

catoni_law* catoni_law_pareto(double alpha) {
  return make_handle<catoni_law>([&] { return catoni::Law(catoni::SymmetricParetoLaw(alpha)); });
}

catoni_law* catoni_law_worst_case(double alpha, double v, int64_t n, double eta, double gamma) {
  return make_handle<catoni_law>(
      [&] { return catoni::Law(catoni::WorstCaseLaw(alpha, v, n, eta, gamma)); });
}

void catoni_law_free(catoni_law* law) { delete law; }

char* catoni_law_to_json(const catoni_law* law) {
  if (law == nullptr) {
    set_error("law_to_json: law is NULL");
    return nullptr;
  }
  return copy_string(catoni::law_to_json(law->impl));
}

catoni_status catoni_law_alpha(const catoni_law* law, double* out) {
  if (catoni_status s = require(law != nullptr && out != nullptr, "law_alpha: NULL argument")) {
    return s;
  }
  return guarded([&] { *out = catoni::law_alpha(law->impl); });
}

catoni_status catoni_law_v(const catoni_law* law, double* out) {
  if (catoni_status s = require(law != nullptr && out != nullptr, "law_v: NULL argument")) {
    return s;
  }
  return guarded([&] { *out = catoni::law_v(law->impl); });
}

catoni_status catoni_law_mean(const catoni_law* law, double* out) {
  if (catoni_status s = require(law != nullptr && out != nullptr, "law_mean: NULL argument")) {
    return s;
  }
  return guarded([&] { *out = catoni::law_mean(law->impl); });
}

catoni_status catoni_law_cdf(const catoni_law* law, double x, double* out) {
  if (catoni_status s = require(law != nullptr && out != nullptr, "law_cdf: NULL argument")) {
    return s;
  }
  return guarded([&] { *out = catoni::law_cdf(law->impl, x); });
}

catoni_status catoni_law_moment_errors(const catoni_law* law, double* mean_err,
                                       double* alpha_moment_err) {
  if (catoni_status s = require(law != nullptr && mean_err != nullptr &&
                                    alpha_moment_err != nullptr,
                                "law_moment_errors: NULL argument")) {
    return s;
  }
  return guarded([&] {
    const catoni::MomentCheck check = std::visit(
        [](const auto& l) { return catoni::verify_moments(l); }, law->impl);
    *mean_err = check.mean_err;
    *alpha_moment_err = check.alpha_moment_err;
  });
}

catoni_status catoni_law_sample(const catoni_law* law, uint64_t seed, int64_t count,
                                double* out) {
  if (catoni_status s = require(law != nullptr && out != nullptr, "law_sample: NULL argument")) {
    return s;
  }
  if (catoni_status s = require(count >= 0, "law_sample: count must be nonnegative")) return s;
  return guarded([&] {
    catoni::SplitMix64 rng(seed);
    for (int64_t i = 0; i < count; ++i) out[i] = catoni::law_sample(law->impl, rng);
  });
}

/* --- Monte Carlo validation ------------------------------------------------ */

catoni_status catoni_simulate(const catoni_law* law, int64_t n, double epsilon, int64_t trials,
                              uint64_t seed, int threads, catoni_simulation_result* out) {
  if (catoni_status s = require(law != nullptr && out != nullptr, "simulate: NULL argument")) {
    return s;
  }
  return guarded([&] {
    catoni::SimulationConfig config{law->impl, n, epsilon, trials, seed, threads};
    const catoni::SimulationResult r = catoni::run_simulation(config);
    out->trials = r.trials;
    out->beta = r.beta;
    out->m_estimator_bound = r.m_estimator_bound;
    out->empirical_upper = r.empirical_upper;
    out->empirical_lower_eta = r.empirical_lower_eta;
    out->exceed_m_estimator = r.exceed_m_estimator;
    out->exceed_empirical_upper = r.exceed_empirical_upper;
    out->exceed_empirical_lower = r.exceed_empirical_lower;
  });
}

/* --- truncated-loss l1 regression ----------------------------------------- */

catoni_problem* catoni_problem_from_arrays(const double* xs_row_major, const double* ys,
                                           int64_t n, int64_t d, double radius_r) {
  if (xs_row_major == nullptr || ys == nullptr || n < 1 || d < 1) {
    set_error("problem_from_arrays: arrays must be non-NULL with n >= 1 and d >= 1");
    return nullptr;
  }
  return make_handle<catoni_problem>([&] {
    return catoni::RegressionProblem(std::vector<double>(xs_row_major, xs_row_major + n * d),
                                     std::vector<double>(ys, ys + n), d, radius_r);
  });
}

catoni_problem* catoni_problem_from_csv(const char* path, int has_header, double radius_r) {
  if (path == nullptr) {
    set_error("problem_from_csv: path is NULL");
    return nullptr;
  }
  return make_handle<catoni_problem>(
      [&] { return catoni::RegressionProblem::from_csv(path, has_header != 0, radius_r); });
}

void catoni_problem_free(catoni_problem* problem) { delete problem; }

int64_t catoni_problem_n(const catoni_problem* problem) {
  return problem == nullptr ? 0 : problem->impl.n();
}

int64_t catoni_problem_d(const catoni_problem* problem) {
  return problem == nullptr ? 0 : problem->impl.d();
}

catoni_status catoni_truncated_risk(const catoni_problem* problem, const double* theta,
                                    double beta, double alpha, double* out) {
  if (catoni_status s = require(problem != nullptr && theta != nullptr && out != nullptr,
                                "truncated_risk: NULL argument")) {
    return s;
  }
  return guarded([&] {
    *out = catoni::truncated_risk(
        std::span<const double>(theta, static_cast<std::size_t>(problem->impl.d())),
        problem->impl, beta, alpha);
  });
}

catoni_status catoni_covering_number_log(int64_t d, double radius_r, double epsilon_net,
                                         double* out) {
  if (catoni_status s = require(out != nullptr, "covering_number_log: out is NULL")) return s;
  return guarded([&] { *out = catoni::covering_number_log(d, radius_r, epsilon_net); });
}

catoni_status catoni_tune_beta_regression(int64_t n, double covering_log, double delta,
                                          double alpha, double* out) {
  if (catoni_status s = require(out != nullptr, "tune_beta_regression: out is NULL")) return s;
  return guarded([&] { *out = catoni::tune_beta_regression(n, covering_log, delta, alpha); });
}

catoni_status catoni_problem_empirical_moments(const catoni_problem* problem, double alpha,
                                               catoni_moments* out) {
  if (catoni_status s = require(problem != nullptr && out != nullptr,
                                "problem_empirical_moments: NULL argument")) {
    return s;
  }
  return guarded([&] {
    const catoni::ProblemMoments m = catoni::empirical_moments(problem->impl, alpha);
    out->e_abs_x = m.e_abs_x;
    out->e_abs_x_alpha = m.e_abs_x_alpha;
    out->sup_r_alpha = m.sup_r_alpha;
  });
}

namespace {

void fill_certificate(const catoni::ExcessRiskCertificate& cert, catoni_certificate* out) {
  out->bound_value = cert.bound_value;
  out->net_term = cert.components.net_term;
  out->moment_term = cert.components.moment_term;
  out->log_term = cert.components.log_term;
  out->covering_log = cert.covering_log;
  out->beta_used = cert.beta_used;
}

}  // namespace

catoni_status catoni_excess_risk_bound(const catoni_moments* moments, double alpha, double delta,
                                       int64_t n, int64_t d, double radius_r, double epsilon_net,
                                       catoni_certificate* out) {
  if (catoni_status s = require(moments != nullptr && out != nullptr,
                                "excess_risk_bound: NULL argument")) {
    return s;
  }
  return guarded([&] {
    const catoni::ProblemMoments m{moments->e_abs_x, moments->e_abs_x_alpha,
                                   moments->sup_r_alpha};
    fill_certificate(catoni::excess_risk_bound(m, alpha, delta, n, d, radius_r, epsilon_net),
                     out);
  });
}

catoni_status catoni_minimize_truncated_risk(const catoni_problem* problem, double alpha,
                                             double beta, uint64_t seed, int64_t max_risk_evals,
                                             double* theta_out, double* risk_out,
                                             int* budget_exhausted) {
  if (catoni_status s = require(problem != nullptr && theta_out != nullptr,
                                "minimize_truncated_risk: NULL argument")) {
    return s;
  }
  return guarded([&] {
    catoni::OptimizerBudget budget;
    if (max_risk_evals > 0) budget.max_risk_evals = max_risk_evals;
    // delta/epsilon_net are irrelevant to the optimizer; placeholders only.
    const catoni::RiskConfig cfg(alpha, beta, 0.25, 1.0);
    const catoni::MinimizeResult r =
        catoni::minimize_truncated_risk(problem->impl, cfg, budget, seed);
    for (int64_t k = 0; k < problem->impl.d(); ++k) theta_out[k] = r.theta[static_cast<std::size_t>(k)];
    if (risk_out != nullptr) *risk_out = r.risk;
    if (budget_exhausted != nullptr) *budget_exhausted = r.budget_exhausted ? 1 : 0;
  });
}

catoni_status catoni_regress(const catoni_problem* problem, double alpha, double delta,
                             const catoni_moments* moments, uint64_t seed, double* theta_out,
                             catoni_certificate* cert_out, int* budget_exhausted) {
  if (catoni_status s = require(problem != nullptr && theta_out != nullptr && cert_out != nullptr,
                                "regress: NULL argument")) {
    return s;
  }
  return guarded([&] {
    const catoni::ProblemMoments analytic =
        moments != nullptr
            ? catoni::ProblemMoments{moments->e_abs_x, moments->e_abs_x_alpha,
                                     moments->sup_r_alpha}
            : catoni::ProblemMoments{};
    const catoni::RegressionResult result =
        catoni::regress(problem->impl, alpha, delta, moments != nullptr ? &analytic : nullptr,
                        seed, catoni::OptimizerBudget{});
    for (int64_t k = 0; k < problem->impl.d(); ++k) {
      theta_out[k] = result.opt.theta[static_cast<std::size_t>(k)];
    }
    fill_certificate(result.certificate, cert_out);
    if (budget_exhausted != nullptr) *budget_exhausted = result.opt.budget_exhausted ? 1 : 0;
  });
}

/* --- synthetic regression laws --------------------------------------------- */

catoni_reglaw* catoni_reglaw_from_json(const char* json) {
  if (json == nullptr) {
    set_error("reglaw_from_json: json is NULL");
    return nullptr;
  }
  return make_handle<catoni_reglaw>([&] { return catoni::PlantedRegressionLaw::from_json(json); });
}

void catoni_reglaw_free(catoni_reglaw* law) { delete law; }

int64_t catoni_reglaw_dim(const catoni_reglaw* law) {
  return law == nullptr ? 0 : law->impl.dim();
}

catoni_status catoni_reglaw_theta_star(const catoni_reglaw* law, double* theta_out) {
  if (catoni_status s = require(law != nullptr && theta_out != nullptr,
                                "reglaw_theta_star: NULL argument")) {
    return s;
  }
  const std::vector<double>& star = law->impl.theta_star();
  for (std::size_t k = 0; k < star.size(); ++k) theta_out[k] = star[k];
  return CATONI_OK;
}

catoni_status catoni_reglaw_sample(const catoni_reglaw* law, uint64_t seed, int64_t count,
                                   double* xs_out, double* ys_out) {
  if (catoni_status s = require(law != nullptr && xs_out != nullptr && ys_out != nullptr,
                                "reglaw_sample: NULL argument")) {
    return s;
  }
  if (catoni_status s = require(count >= 0, "reglaw_sample: count must be nonnegative")) return s;
  return guarded([&] {
    catoni::SplitMix64 rng(seed);
    const int64_t d = law->impl.dim();
    for (int64_t i = 0; i < count; ++i) law->impl.sample(rng, xs_out + i * d, ys_out + i);
  });
}

catoni_status catoni_reglaw_moments(const catoni_reglaw* law, double alpha, double radius_r,
                                    catoni_moments* out) {
  if (catoni_status s =
          require(law != nullptr && out != nullptr, "reglaw_moments: NULL argument")) {
    return s;
  }
  return guarded([&] {
    const catoni::ProblemMoments m = law->impl.analytic_moments(alpha, radius_r);
    out->e_abs_x = m.e_abs_x;
    out->e_abs_x_alpha = m.e_abs_x_alpha;
    out->sup_r_alpha = m.sup_r_alpha;
  });
}

catoni_status catoni_reglaw_l1_risk(const catoni_reglaw* law, const double* theta,
                                    int64_t mc_samples, uint64_t seed, double* risk,
                                    double* std_error) {
  if (catoni_status s = require(law != nullptr && theta != nullptr && risk != nullptr,
                                "reglaw_l1_risk: NULL argument")) {
    return s;
  }
  return guarded([&] {
    const std::span<const double> view(theta, static_cast<std::size_t>(law->impl.dim()));
    if (mc_samples <= 0) {
      *risk = law->impl.l1_risk(view);
      if (std_error != nullptr) *std_error = 0.0;
    } else {
      const auto estimate = law->impl.l1_risk_mc(view, mc_samples, seed);
      *risk = estimate.value;
      if (std_error != nullptr) *std_error = estimate.std_error;
    }
  });
}

catoni_status catoni_reglaw_l1_excess(const catoni_reglaw* law, const double* theta,
                                      const double* theta_ref, int64_t mc_samples, uint64_t seed,
                                      double* excess, double* std_error) {
  if (catoni_status s =
          require(law != nullptr && theta != nullptr && theta_ref != nullptr && excess != nullptr,
                  "reglaw_l1_excess: NULL argument")) {
    return s;
  }
  return guarded([&] {
    const std::size_t d = static_cast<std::size_t>(law->impl.dim());
    if (mc_samples <= 0 && law->impl.has_closed_form_risk()) {
      *excess = law->impl.l1_risk(std::span<const double>(theta, d)) -
                law->impl.l1_risk(std::span<const double>(theta_ref, d));
      if (std_error != nullptr) *std_error = 0.0;
      return;
    }
    const auto estimate =
        law->impl.l1_excess_mc(std::span<const double>(theta, d),
                               std::span<const double>(theta_ref, d), mc_samples, seed);
    *excess = estimate.value;
    if (std_error != nullptr) *std_error = estimate.std_error;
  });
}

} /* extern "C" */
