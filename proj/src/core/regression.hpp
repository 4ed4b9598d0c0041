#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/rng.hpp"

namespace catoni {

// Design matrix, responses and the parameter-domain radius. theta ranges
// over the centered Euclidean ball of radius radius_r.
class RegressionProblem {
 public:
  RegressionProblem(std::vector<double> xs_row_major, std::vector<double> ys, std::int64_t d,
                    double radius_r);
  static RegressionProblem from_csv(const std::string& path, bool header, double radius_r);

  std::int64_t n() const noexcept { return n_; }
  std::int64_t d() const noexcept { return d_; }
  double radius_r() const noexcept { return radius_r_; }
  std::span<const double> x_row(std::int64_t i) const {
    return {xs_.data() + i * d_, static_cast<std::size_t>(d_)};
  }
  double y(std::int64_t i) const { return ys_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& ys() const noexcept { return ys_; }

 private:
  std::vector<double> xs_;  // row-major n x d
  std::vector<double> ys_;
  std::int64_t n_;
  std::int64_t d_;
  double radius_r_;
};

struct RiskConfig {
  double alpha;
  double beta;
  double delta;        // in (0, 1/2)
  double epsilon_net;  // net resolution entering the covering bound

  RiskConfig(double alpha, double beta, double delta, double epsilon_net);
};

struct OptimizerBudget {
  int starts = 8;                      // origin + l1 warm start + random ball points
  std::int64_t max_risk_evals = 400000;
  double step_tol = 1e-7;              // relative to max(1, radius)
};

struct MinimizeResult {
  std::vector<double> theta;
  double risk;
  bool budget_exhausted;
  std::int64_t risk_evals;
};

// (1/(n beta)) sum_i phi(beta |y_i - x_i^T theta|). The argument of phi is
// nonnegative, so only the upper envelope branch is ever exercised.
double truncated_risk(std::span<const double> theta, const RegressionProblem& problem,
                      double beta, double alpha);

// Multi-start projected compass search over the radius-r ball. The objective
// is nonconvex for large residuals, so each start descends locally and the
// best point wins. Deterministic for a fixed seed.
MinimizeResult minimize_truncated_risk(const RegressionProblem& problem, const RiskConfig& cfg,
                                       const OptimizerBudget& budget, std::uint64_t seed);

// d * log(6 radius_r / epsilon_net): volumetric upper bound on the log
// covering number of the radius-r ball at net resolution epsilon_net.
double covering_number_log(std::int64_t d, double radius_r, double epsilon_net);

// beta = ((covering_log + 2 log(1/delta)) / n)^(1/alpha).
double tune_beta_regression(std::int64_t n, double covering_log, double delta, double alpha);

// Population quantities entering the certificate. sup_r_alpha only needs to
// be an upper bound on sup_theta E|y - x^T theta|^alpha; the certificate
// stays valid for any over-estimate.
struct ProblemMoments {
  double e_abs_x;        // E |x|
  double e_abs_x_alpha;  // E |x|^alpha
  double sup_r_alpha;    // upper bound on the alpha-risk over the ball
};

// 2^(alpha-1) (mean|y|^alpha + r^alpha mean|x|^alpha) triangle-inequality
// bound with moments replaced by sample averages. Outside any guarantee;
// used when no analytic law is supplied.
ProblemMoments empirical_moments(const RegressionProblem& problem, double alpha);

struct CertComponents {
  double net_term;     // 2 epsilon_net E|x|
  double moment_term;  // (moment factors) * ((covering_log + 2log(1/delta))/n)^((alpha-1)/alpha)
  double log_term;     // the same power term with unit factor
};

struct ExcessRiskCertificate {
  std::vector<double> theta_hat;  // filled by the regression pipeline
  double bound_value;             // net_term + moment_term + log_term
  CertComponents components;
  double covering_log;
  double beta_used;
};

// Full certificate value at net resolution epsilon_net (1/n reproduces the
// explicit d log(6 n r) form):
//   2 eps E|x| + (2^(a-1) eps^a / a E|x|^a + (2^(a-1)+1)/a supR + 1) * C,
//   C = ((d log(6 r / eps) + 2 log(1/delta)) / n)^((a-1)/a).
ExcessRiskCertificate excess_risk_bound(const ProblemMoments& moments, double alpha,
                                        double delta, std::int64_t n, std::int64_t d,
                                        double radius_r, double epsilon_net);

struct RegressionResult {
  MinimizeResult opt;
  ExcessRiskCertificate certificate;
  ProblemMoments moments;
  bool moments_estimated;  // true when moments came from the sample itself
};

// Pipeline: epsilon_net = 1/n, tuned beta, multi-start minimization, then
// the certificate. `analytic` overrides the empirical moment plug-in.
RegressionResult regress(const RegressionProblem& problem, double alpha, double delta,
                         const ProblemMoments* analytic, std::uint64_t seed,
                         const OptimizerBudget& budget);

// --- synthetic data laws -------------------------------------------------

enum class XDesign { kRademacher, kGaussian };
enum class NoiseKind { kNone, kRademacherSign, kSymmetricLomax };

// y = x^T theta_star + Z with independent symmetric noise Z. Rademacher
// designs admit closed-form l1 risk; every design admits a Monte Carlo
// surrogate.
class PlantedRegressionLaw {
 public:
  PlantedRegressionLaw(std::vector<double> theta_star, XDesign design, NoiseKind noise,
                       double noise_shape);

  static PlantedRegressionLaw from_json(const std::string& text);
  std::string to_json() const;

  std::int64_t dim() const noexcept { return static_cast<std::int64_t>(theta_star_.size()); }
  const std::vector<double>& theta_star() const noexcept { return theta_star_; }
  XDesign design() const noexcept { return design_; }
  NoiseKind noise() const noexcept { return noise_; }
  double noise_shape() const noexcept { return noise_shape_; }

  void sample(SplitMix64& rng, double* x_out, double* y_out) const;
  RegressionProblem make_problem(std::int64_t n, double radius_r, SplitMix64& rng) const;

  double noise_mean_abs() const;                  // E |Z|
  double noise_abs_moment(double exponent) const;  // E |Z|^exponent
  double noise_mean_abs_dev(double t) const;       // E |Z - t|

  // Closed forms for the certificate inputs; sup_r_alpha is the documented
  // triangle-inequality upper bound.
  ProblemMoments analytic_moments(double alpha, double radius_r) const;

  bool has_closed_form_risk() const;
  double l1_risk(std::span<const double> theta) const;  // closed form
  struct McEstimate {
    double value;
    double std_error;
  };
  McEstimate l1_risk_mc(std::span<const double> theta, std::int64_t samples,
                        std::uint64_t seed) const;
  // Paired estimate of R(theta) - R(theta_ref) over common draws; the
  // differenced summands are bounded, so the standard error is meaningful
  // even when the residuals have infinite variance.
  McEstimate l1_excess_mc(std::span<const double> theta, std::span<const double> theta_ref,
                          std::int64_t samples, std::uint64_t seed) const;

 private:
  std::vector<double> theta_star_;
  XDesign design_;
  NoiseKind noise_;
  double noise_shape_;
};

}  // namespace catoni
