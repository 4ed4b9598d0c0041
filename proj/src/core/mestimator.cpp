#include "core/mestimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "core/errors.hpp"

namespace catoni {

namespace {

double sorted_quantile(const std::vector<double>& sorted, double p) {
  // Linear interpolation between order statistics (the common "type 7" rule).
  const std::size_t n = sorted.size();
  if (n == 1) return sorted[0];
  const double h = p * static_cast<double>(n - 1);
  const std::size_t lo = static_cast<std::size_t>(h);
  const std::size_t hi = std::min(lo + 1, n - 1);
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

void require_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::domain_error("beta must be a positive finite number, got " + std::to_string(beta));
  }
}

void require_epsilon_half(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw std::domain_error("epsilon must lie in (0, 1/2), got " + std::to_string(epsilon));
  }
}

void require_n(std::int64_t n) {
  if (n < 1) throw std::domain_error("n must be a positive integer, got " + std::to_string(n));
}

}  // namespace

SampleBatch::SampleBatch(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("sample batch must not be empty");
  min_ = values_[0];
  max_ = values_[0];
  for (double x : values_) {
    if (!std::isfinite(x)) throw std::invalid_argument("sample batch contains a non-finite value");
    min_ = std::min(min_, x);
    max_ = std::max(max_, x);
  }
}

double SampleBatch::mean() const {
  double s = 0.0;
  for (double x : values_) s += x;
  return s / static_cast<double>(values_.size());
}

double SampleBatch::median() const {
  std::vector<double> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  return sorted_quantile(sorted, 0.5);
}

double SampleBatch::interquartile_range() const {
  std::vector<double> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  return sorted_quantile(sorted, 0.75) - sorted_quantile(sorted, 0.25);
}

double SampleBatch::central_moment(double alpha, double center) const {
  detail::require_alpha(alpha);
  double s = 0.0;
  for (double x : values_) s += detail::pow_abs(x - center, alpha);
  return s / static_cast<double>(values_.size());
}

EstimatorConfig::EstimatorConfig(AlphaParams params, std::int64_t n_in, double epsilon_in,
                                 double beta_in)
    : alpha_params(params), n(n_in), epsilon(epsilon_in), beta(beta_in) {
  require_n(n);
  require_epsilon_half(epsilon);
  require_beta(beta);
}

double criterion_r(double theta, const SampleBatch& batch, double beta, double alpha) {
  require_beta(beta);
  detail::require_alpha(alpha);
  double s = 0.0;
  for (double x : batch.values()) s += phi_widest(beta * (x - theta), alpha);
  return s / (beta * static_cast<double>(batch.size()));
}

double default_root_tol(const SampleBatch& batch) {
  return 1e-10 * std::max(1.0, batch.interquartile_range());
}

double solve_theta_hat(const SampleBatch& batch, double beta, double alpha, double tol) {
  require_beta(beta);
  return solve_theta_hat(batch, beta, alpha, tol, batch.min() - 1.0 / beta,
                         batch.max() + 1.0 / beta);
}

double solve_theta_hat(const SampleBatch& batch, double beta, double alpha, double tol,
                       double bracket_lo, double bracket_hi) {
  require_beta(beta);
  detail::require_alpha(alpha);
  if (!(tol > 0.0)) throw std::domain_error("root tolerance must be positive");

  double lo = bracket_lo;
  double hi = bracket_hi;
  double r_lo = criterion_r(lo, batch, beta, alpha);
  double r_hi = criterion_r(hi, batch, beta, alpha);

  // r is strictly decreasing, so a valid bracket has r(lo) > 0 > r(hi).
  // The initial bracket already guarantees this for finite data; expand
  // geometrically as a safety net and give up on overflow-scale inputs.
  int expansions = 0;
  while ((!(r_lo > 0.0) || !(r_hi < 0.0)) && expansions < 64) {
    const double width = std::max(hi - lo, 1.0);
    if (!(r_lo > 0.0)) {
      lo -= width;
      r_lo = criterion_r(lo, batch, beta, alpha);
    }
    if (!(r_hi < 0.0)) {
      hi += width;
      r_hi = criterion_r(hi, batch, beta, alpha);
    }
    ++expansions;
  }
  if (r_lo == 0.0) return lo;
  if (r_hi == 0.0) return hi;
  if (!(r_lo > 0.0) || !(r_hi < 0.0) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::runtime_error("solve_theta_hat: failed to bracket the root; input scale too large");
  }

  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 256; ++iter) {
    mid = 0.5 * (lo + hi);
    if (hi - lo <= tol * std::max(1.0, std::fabs(mid))) break;
    if (mid == lo || mid == hi) break;  // bracket narrowed to adjacent doubles
    const double r_mid = criterion_r(mid, batch, beta, alpha);
    if (r_mid == 0.0) return mid;
    if (r_mid > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

double tune_beta(const AlphaParams& params, std::int64_t n, double epsilon) {
  require_n(n);
  require_epsilon_half(epsilon);
  if (!(params.v > 0.0)) throw std::domain_error("tune_beta requires v > 0");
  const double t =
      2.0 * params.alpha * std::log(1.0 / epsilon) / (static_cast<double>(n) * params.v);
  return 0.5 * std::pow(t, 1.0 / params.alpha);
}

double deviation_bound(const AlphaParams& params, std::int64_t n, double epsilon) {
  require_n(n);
  require_epsilon_half(epsilon);
  if (!(params.v > 0.0)) throw std::domain_error("deviation_bound requires v > 0");

  const Conditions cond = check_conditions(params, n, epsilon, tune_beta(params, n, epsilon));
  if (!cond.assu_ok) {
    throw ConditionError("assu",
                         "deviation_bound: sample-size condition (assu) fails: n = " +
                             std::to_string(n) + " is too small for the requested epsilon");
  }

  const double alpha = params.alpha;
  const double exponent = (alpha - 1.0) / alpha;
  const double log_term = 2.0 * alpha * std::log(1.0 / epsilon);
  const double numerator =
      2.0 * std::pow(log_term / static_cast<double>(n), exponent) * std::pow(params.v, 1.0 / alpha);
  const double denominator =
      alpha - std::pow(log_term / (static_cast<double>(n) * params.v), exponent);
  return numerator / denominator;
}

Conditions check_conditions(const AlphaParams& params, std::int64_t n, double epsilon,
                            double beta) {
  const double alpha = params.alpha;
  const double v = params.v;
  const double log_inv_eps = std::log(1.0 / epsilon);
  const double dn = static_cast<double>(n);

  Conditions out{};

  const double assu_rhs =
      std::pow((2.0 * v + 1.0) / alpha, alpha / (alpha - 1.0)) * 2.0 * alpha * log_inv_eps / v;
  out.assu_ok = dn >= assu_rhs;

  const double exis_rhs = (alpha - 1.0) / std::pow(2.0, alpha) -
                          alpha * log_inv_eps / (std::pow(2.0, alpha - 1.0) * dn);
  out.exisineq_ok = std::pow(beta, alpha) * v <= exis_rhs;

  const double exis2_lhs = std::pow(2.0 * beta, alpha - 1.0) / alpha * (v + 1.0) +
                           log_inv_eps / (dn * beta);
  out.exisineq2_ok = exis2_lhs <= 1.0;

  out.en_ok = (epsilon < 1.0 / (3.0 * std::numbers::e)) && n >= 2;

  // The second existence condition implies the first; repair the one way a
  // rounding boundary could disagree.
  if (out.exisineq2_ok && !out.exisineq_ok) out.exisineq_ok = true;
  return out;
}

namespace {

double b_plus_impl(double theta, const EstimatorConfig& cfg, double m) {
  const double alpha = cfg.alpha_params.alpha;
  const double spread =
      std::pow(2.0 * cfg.beta, alpha - 1.0) / alpha *
          (cfg.alpha_params.v + detail::pow_abs(m - theta, alpha)) +
      std::log(1.0 / cfg.epsilon) / (static_cast<double>(cfg.n) * cfg.beta);
  return m - theta + spread;
}

}  // namespace

double b_plus(double theta, const EstimatorConfig& cfg, double m) {
  return b_plus_impl(theta, cfg, m);
}

double b_minus(double theta, const EstimatorConfig& cfg, double m) {
  // Same as B+ with both bound terms negated.
  return 2.0 * (m - theta) - b_plus_impl(theta, cfg, m);
}

std::pair<double, double> theta_plus_minus(const EstimatorConfig& cfg, double m) {
  const Conditions cond =
      check_conditions(cfg.alpha_params, cfg.n, cfg.epsilon, cfg.beta);
  if (!cond.exisineq2_ok) {
    throw ConditionError("exisineq2",
                         "theta_plus_minus: root-localization condition (exisineq2) fails for "
                         "beta = " +
                             std::to_string(cfg.beta));
  }

  // B+ decreases strictly on (m, m + 1/(2 beta)] and is positive at m, so its
  // smallest root lives in that interval; at the critical parameter the root
  // sits exactly at the interval's right end where B+ only touches zero.
  double lo = m;
  double hi = m + 0.5 / cfg.beta;
  const double f_lo = b_plus_impl(lo, cfg, m);
  double f_hi = b_plus_impl(hi, cfg, m);
  if (f_hi > 0.0) {
    const double slack = 1e-10 * std::max(1.0, f_lo);
    if (f_hi <= slack) return {2.0 * m - hi, hi};  // tangent root at the minimum point
    throw std::runtime_error(
        "theta_plus_minus: no sign change for B+; existence precondition violated");
  }

  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (b_plus_impl(mid, cfg, m) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-14 * std::max(1.0, std::fabs(hi))) break;
  }
  const double theta_plus = 0.5 * (lo + hi);
  // B-(2m - theta) = -B+(theta), so the largest root of B- is the mirror image.
  const double theta_minus = 2.0 * m - theta_plus;

  const double slack = 1e-9;
  if (!(theta_plus > m && theta_plus <= m + 1.0 + slack)) {
    throw std::runtime_error("theta_plus_minus: root left (m, m+1] despite exisineq2");
  }
  return {theta_minus, theta_plus};
}

double estimate_v_plugin(const SampleBatch& batch, double alpha) {
  return batch.central_moment(alpha, batch.median());
}

DeviationReport estimate(const SampleBatch& batch, const AlphaParams& params, double epsilon) {
  const std::int64_t n = batch.size();
  const double beta = tune_beta(params, n, epsilon);
  DeviationReport report{};
  report.beta_used = beta;
  report.conditions = check_conditions(params, n, epsilon, beta);
  report.bound = deviation_bound(params, n, epsilon);  // throws when assu fails
  report.theta_hat = solve_theta_hat(batch, beta, params.alpha, default_root_tol(batch));
  return report;
}

}  // namespace catoni
