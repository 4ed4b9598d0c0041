#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "core/influence.hpp"

namespace catoni {

// Immutable batch of finite sample values.
class SampleBatch {
 public:
  explicit SampleBatch(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  std::int64_t size() const noexcept { return static_cast<std::int64_t>(values_.size()); }
  double min() const noexcept { return min_; }
  double max() const noexcept { return max_; }

  double mean() const;
  double median() const;
  double interquartile_range() const;
  // (1/n) sum_i |x_i - center|^alpha
  double central_moment(double alpha, double center) const;

 private:
  std::vector<double> values_;
  double min_;
  double max_;
};

struct EstimatorConfig {
  AlphaParams alpha_params;
  std::int64_t n;
  double epsilon;  // in (0, 1/2)
  double beta;     // > 0

  EstimatorConfig(AlphaParams params, std::int64_t n, double epsilon, double beta);
};

// Hypotheses of the deviation guarantees, each evaluated exactly as written:
//   assu_ok      n >= ((2v+1)/alpha)^(alpha/(alpha-1)) * 2 alpha log(1/eps) / v
//   exisineq_ok  beta^alpha v <= (alpha-1)/2^alpha - alpha log(1/eps) / (2^(alpha-1) n)
//   exisineq2_ok (2 beta)^(alpha-1)/alpha (v+1) + log(1/eps)/(n beta) <= 1
//   en_ok        eps < 1/(3e) and n >= 2
// exisineq2 implies exisineq; check_conditions enforces that implication.
struct Conditions {
  bool assu_ok;
  bool exisineq_ok;
  bool exisineq2_ok;
  bool en_ok;
};

struct DeviationReport {
  double theta_hat;
  double bound;
  double beta_used;
  Conditions conditions;
};

// (1/(beta n)) sum_i phi(beta (x_i - theta)); strictly decreasing in theta.
double criterion_r(double theta, const SampleBatch& batch, double beta, double alpha);

// 1e-10 * max(1, interquartile range of the batch).
double default_root_tol(const SampleBatch& batch);

// Unique root of criterion_r. Brackets with [min - 1/beta, max + 1/beta]
// (expanding geometrically if the sign check fails), then bisects until the
// bracket width drops below tol * max(1, |theta|).
double solve_theta_hat(const SampleBatch& batch, double beta, double alpha, double tol);
double solve_theta_hat(const SampleBatch& batch, double beta, double alpha, double tol,
                       double bracket_lo, double bracket_hi);

// beta = (1/2) (2 alpha log(1/eps) / (n v))^(1/alpha), the positive solution
// of (2 beta)^(alpha-1) v = alpha log(1/eps) / (n beta).
double tune_beta(const AlphaParams& params, std::int64_t n, double epsilon);

// 2 (2 alpha log(1/eps)/n)^((alpha-1)/alpha) v^(1/alpha)
//   / (alpha - (2 alpha log(1/eps)/(n v))^((alpha-1)/alpha)).
// Requires assu_ok; throws ConditionError("assu", ...) otherwise.
double deviation_bound(const AlphaParams& params, std::int64_t n, double epsilon);

Conditions check_conditions(const AlphaParams& params, std::int64_t n, double epsilon,
                            double beta);

// Deterministic envelopes of criterion_r around the true mean m:
//   B+(theta) = m - theta + (2 beta)^(alpha-1)/alpha (v + |m-theta|^alpha) + log(1/eps)/(n beta)
//   B-(theta) = m - theta - (2 beta)^(alpha-1)/alpha (v + |m-theta|^alpha) - log(1/eps)/(n beta)
double b_plus(double theta, const EstimatorConfig& cfg, double m);
double b_minus(double theta, const EstimatorConfig& cfg, double m);

// (theta_minus, theta_plus): the largest root of B- = 0 and the smallest
// root of B+ = 0. Requires exisineq2; the roots then lie in [m-1, m) and
// (m, m+1]. theta_minus is obtained from theta_plus by mirror symmetry.
std::pair<double, double> theta_plus_minus(const EstimatorConfig& cfg, double m);

// Plug-in surrogate for v: empirical alpha-th central moment about the
// empirical median. Heuristic only; the guarantees assume v is known.
double estimate_v_plugin(const SampleBatch& batch, double alpha);

// Full pipeline with tuned beta: solves theta_hat and evaluates the
// deviation bound. Throws ConditionError when assu fails.
DeviationReport estimate(const SampleBatch& batch, const AlphaParams& params, double epsilon);

}  // namespace catoni
