#include "core/regression.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/influence.hpp"
#include "core/io.hpp"

namespace catoni {

namespace {

double norm2(std::span<const double> theta) {
  double s = 0.0;
  for (double t : theta) s += t * t;
  return std::sqrt(s);
}

void project_to_ball(std::vector<double>& theta, double radius) {
  const double norm = norm2(theta);
  if (norm > radius) {
    const double scale = radius / norm;
    for (double& t : theta) t *= scale;
  }
}

// Gaussian elimination with partial pivoting; false on (near-)singular a.
bool solve_dense(std::vector<double> a, std::vector<double> b, std::int64_t d,
                 std::vector<double>& out) {
  for (std::int64_t col = 0; col < d; ++col) {
    std::int64_t pivot = col;
    for (std::int64_t row = col + 1; row < d; ++row) {
      if (std::fabs(a[row * d + col]) > std::fabs(a[pivot * d + col])) pivot = row;
    }
    if (std::fabs(a[pivot * d + col]) < 1e-12) return false;
    if (pivot != col) {
      for (std::int64_t k = 0; k < d; ++k) std::swap(a[col * d + k], a[pivot * d + k]);
      std::swap(b[col], b[pivot]);
    }
    for (std::int64_t row = col + 1; row < d; ++row) {
      const double factor = a[row * d + col] / a[col * d + col];
      for (std::int64_t k = col; k < d; ++k) a[row * d + k] -= factor * a[col * d + k];
      b[row] -= factor * b[col];
    }
  }
  out.assign(static_cast<std::size_t>(d), 0.0);
  for (std::int64_t row = d - 1; row >= 0; --row) {
    double s = b[row];
    for (std::int64_t k = row + 1; k < d; ++k) s -= a[row * d + k] * out[k];
    out[row] = s / (a[row * d + row] + 0.0);
  }
  return true;
}

double gaussian_draw(SplitMix64& rng) {
  const double u1 = rng.uniform01();
  const double u2 = rng.uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

RegressionProblem::RegressionProblem(std::vector<double> xs_row_major, std::vector<double> ys,
                                     std::int64_t d, double radius_r)
    : xs_(std::move(xs_row_major)), ys_(std::move(ys)), d_(d), radius_r_(radius_r) {
  if (d_ < 1) throw std::invalid_argument("regression problem needs d >= 1");
  if (ys_.empty()) throw std::invalid_argument("regression problem needs at least one row");
  if (xs_.size() != ys_.size() * static_cast<std::size_t>(d_)) {
    throw std::invalid_argument("design matrix size does not match n x d");
  }
  if (!(radius_r_ > 0.0)) throw std::invalid_argument("radius_r must be positive");
  n_ = static_cast<std::int64_t>(ys_.size());
  for (double value : xs_) {
    if (!std::isfinite(value)) throw std::invalid_argument("design matrix has a non-finite entry");
  }
  for (double value : ys_) {
    if (!std::isfinite(value)) throw std::invalid_argument("responses have a non-finite entry");
  }
}

RegressionProblem RegressionProblem::from_csv(const std::string& path, bool header,
                                              double radius_r) {
  ProblemData data = read_problem_csv(path, header);
  return RegressionProblem(std::move(data.xs), std::move(data.ys), data.d, radius_r);
}

RiskConfig::RiskConfig(double alpha_in, double beta_in, double delta_in, double epsilon_net_in)
    : alpha(alpha_in), beta(beta_in), delta(delta_in), epsilon_net(epsilon_net_in) {
  detail::require_alpha(alpha);
  if (!(beta > 0.0)) throw std::domain_error("RiskConfig requires beta > 0");
  if (!(delta > 0.0 && delta < 0.5)) throw std::domain_error("RiskConfig requires delta in (0, 1/2)");
  if (!(epsilon_net > 0.0)) throw std::domain_error("RiskConfig requires epsilon_net > 0");
}

double truncated_risk(std::span<const double> theta, const RegressionProblem& problem,
                      double beta, double alpha) {
  detail::require_alpha(alpha);
  if (!(beta > 0.0)) throw std::domain_error("truncated_risk requires beta > 0");
  if (static_cast<std::int64_t>(theta.size()) != problem.d()) {
    throw std::invalid_argument("theta dimension " + std::to_string(theta.size()) +
                                " does not match problem dimension " +
                                std::to_string(problem.d()));
  }
  double s = 0.0;
  for (std::int64_t i = 0; i < problem.n(); ++i) {
    const std::span<const double> row = problem.x_row(i);
    double fit = 0.0;
    for (std::int64_t k = 0; k < problem.d(); ++k) fit += row[k] * theta[k];
    s += phi_widest(beta * std::fabs(problem.y(i) - fit), alpha);
  }
  return s / (static_cast<double>(problem.n()) * beta);
}

namespace {

// Handful of reweighted least-squares rounds toward the empirical l1 fit;
// only used to seed the local search, so convergence is not required.
std::vector<double> l1_warm_start(const RegressionProblem& problem) {
  const std::int64_t n = problem.n();
  const std::int64_t d = problem.d();
  double y_scale = 0.0;
  for (std::int64_t i = 0; i < n; ++i) y_scale += std::fabs(problem.y(i));
  y_scale = std::max(y_scale / static_cast<double>(n), 1e-12);

  std::vector<double> theta(static_cast<std::size_t>(d), 0.0);
  std::vector<double> ata;
  std::vector<double> atb;
  std::vector<double> next;
  for (int round = 0; round < 12; ++round) {
    ata.assign(static_cast<std::size_t>(d * d), 0.0);
    atb.assign(static_cast<std::size_t>(d), 0.0);
    for (std::int64_t i = 0; i < n; ++i) {
      const std::span<const double> row = problem.x_row(i);
      double fit = 0.0;
      for (std::int64_t k = 0; k < d; ++k) fit += row[k] * theta[k];
      const double resid = problem.y(i) - fit;
      const double w = round == 0 ? 1.0 : 1.0 / std::max(std::fabs(resid), 1e-6 * y_scale);
      for (std::int64_t j = 0; j < d; ++j) {
        atb[j] += w * row[j] * problem.y(i);
        for (std::int64_t k = 0; k < d; ++k) ata[j * d + k] += w * row[j] * row[k];
      }
    }
    if (!solve_dense(ata, atb, d, next)) break;
    bool same = true;
    for (std::int64_t k = 0; k < d; ++k) {
      if (std::fabs(next[k] - theta[k]) > 1e-12 * std::max(1.0, std::fabs(theta[k]))) same = false;
    }
    theta = next;
    if (same) break;
  }
  for (double& t : theta) {
    if (!std::isfinite(t)) {
      std::fill(theta.begin(), theta.end(), 0.0);
      break;
    }
  }
  return theta;
}

std::vector<double> random_ball_point(std::int64_t d, double radius, SplitMix64& rng) {
  std::vector<double> point(static_cast<std::size_t>(d));
  double norm = 0.0;
  for (double& coord : point) {
    coord = gaussian_draw(rng);
    norm += coord * coord;
  }
  norm = std::sqrt(norm);
  if (norm == 0.0) return std::vector<double>(static_cast<std::size_t>(d), 0.0);
  const double r = radius * std::pow(rng.uniform01(), 1.0 / static_cast<double>(d));
  for (double& coord : point) coord *= r / norm;
  return point;
}

}  // namespace

MinimizeResult minimize_truncated_risk(const RegressionProblem& problem, const RiskConfig& cfg,
                                       const OptimizerBudget& budget, std::uint64_t seed) {
  if (budget.starts < 1) throw std::domain_error("optimizer needs at least one start");
  const std::int64_t d = problem.d();
  const double radius = problem.radius_r();
  const double step_tol = budget.step_tol * std::max(1.0, radius);

  std::int64_t evals = 0;
  bool exhausted = false;
  const auto risk = [&](std::span<const double> theta) {
    ++evals;
    return truncated_risk(theta, problem, cfg.beta, cfg.alpha);
  };

  std::vector<std::vector<double>> starts;
  starts.emplace_back(static_cast<std::size_t>(d), 0.0);
  {
    std::vector<double> warm = l1_warm_start(problem);
    project_to_ball(warm, radius);
    starts.push_back(std::move(warm));
  }
  SplitMix64 rng(seed);
  while (static_cast<int>(starts.size()) < budget.starts) {
    starts.push_back(random_ball_point(d, radius, rng));
  }

  MinimizeResult best{};
  best.risk = std::numeric_limits<double>::infinity();

  std::vector<double> candidate(static_cast<std::size_t>(d));
  for (const std::vector<double>& start : starts) {
    std::vector<double> theta = start;
    project_to_ball(theta, radius);
    double f = risk(theta);
    double h = radius / 4.0;
    while (h >= step_tol) {
      if (evals >= budget.max_risk_evals) {
        exhausted = true;
        break;
      }
      double best_f = f;
      std::int64_t best_axis = -1;
      double best_sign = 0.0;
      for (std::int64_t axis = 0; axis < d; ++axis) {
        for (double sign : {1.0, -1.0}) {
          candidate = theta;
          candidate[axis] += sign * h;
          project_to_ball(candidate, radius);
          const double fc = risk(candidate);
          if (fc < best_f) {
            best_f = fc;
            best_axis = axis;
            best_sign = sign;
          }
        }
      }
      if (best_axis >= 0) {
        theta[best_axis] += best_sign * h;
        project_to_ball(theta, radius);
        f = best_f;
      } else {
        h *= 0.5;
      }
    }
    if (f < best.risk) {
      best.risk = f;
      best.theta = theta;
    }
    if (exhausted) break;
  }

  best.budget_exhausted = exhausted;
  best.risk_evals = evals;
  return best;
}

double covering_number_log(std::int64_t d, double radius_r, double epsilon_net) {
  if (d < 1) throw std::domain_error("covering_number_log requires d >= 1");
  if (!(radius_r > 0.0)) throw std::domain_error("covering_number_log requires radius_r > 0");
  if (!(epsilon_net > 0.0)) throw std::domain_error("covering_number_log requires epsilon_net > 0");
  return static_cast<double>(d) * std::log(6.0 * radius_r / epsilon_net);
}

double tune_beta_regression(std::int64_t n, double covering_log, double delta, double alpha) {
  detail::require_alpha(alpha);
  if (n < 1) throw std::domain_error("tune_beta_regression requires n >= 1");
  if (!(delta > 0.0 && delta < 0.5)) {
    throw std::domain_error("tune_beta_regression requires delta in (0, 1/2)");
  }
  if (!std::isfinite(covering_log)) {
    throw std::domain_error("tune_beta_regression requires a finite covering_log");
  }
  const double arg = (covering_log + 2.0 * std::log(1.0 / delta)) / static_cast<double>(n);
  if (!(arg > 0.0)) {
    throw std::domain_error("tune_beta_regression: log(N/delta^2) must be positive");
  }
  return std::pow(arg, 1.0 / alpha);
}

ProblemMoments empirical_moments(const RegressionProblem& problem, double alpha) {
  detail::require_alpha(alpha);
  const std::int64_t n = problem.n();
  double sum_norm = 0.0;
  double sum_norm_alpha = 0.0;
  double sum_y_alpha = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    const double norm = norm2(problem.x_row(i));
    sum_norm += norm;
    sum_norm_alpha += detail::pow_abs(norm, alpha);
    sum_y_alpha += detail::pow_abs(problem.y(i), alpha);
  }
  const double dn = static_cast<double>(n);
  ProblemMoments m{};
  m.e_abs_x = sum_norm / dn;
  m.e_abs_x_alpha = sum_norm_alpha / dn;
  m.sup_r_alpha = std::pow(2.0, alpha - 1.0) *
                  (sum_y_alpha / dn +
                   detail::pow_abs(problem.radius_r(), alpha) * m.e_abs_x_alpha);
  return m;
}

ExcessRiskCertificate excess_risk_bound(const ProblemMoments& moments, double alpha,
                                        double delta, std::int64_t n, std::int64_t d,
                                        double radius_r, double epsilon_net) {
  detail::require_alpha(alpha);
  if (!(moments.e_abs_x >= 0.0) || !(moments.e_abs_x_alpha >= 0.0) ||
      !(moments.sup_r_alpha >= 0.0) || !std::isfinite(moments.e_abs_x) ||
      !std::isfinite(moments.e_abs_x_alpha) || !std::isfinite(moments.sup_r_alpha)) {
    throw std::invalid_argument("excess_risk_bound: moment inputs missing or invalid");
  }
  if (n < 1) throw std::domain_error("excess_risk_bound requires n >= 1");

  ExcessRiskCertificate cert{};
  cert.covering_log = covering_number_log(d, radius_r, epsilon_net);
  cert.beta_used = tune_beta_regression(n, cert.covering_log, delta, alpha);

  const double pow2 = std::pow(2.0, alpha - 1.0);
  const double power_term = std::pow(
      (cert.covering_log + 2.0 * std::log(1.0 / delta)) / static_cast<double>(n),
      (alpha - 1.0) / alpha);
  const double moment_factor = pow2 * detail::pow_abs(epsilon_net, alpha) / alpha *
                                   moments.e_abs_x_alpha +
                               (pow2 + 1.0) / alpha * moments.sup_r_alpha;

  cert.components.net_term = 2.0 * epsilon_net * moments.e_abs_x;
  cert.components.moment_term = moment_factor * power_term;
  cert.components.log_term = power_term;
  cert.bound_value =
      cert.components.net_term + cert.components.moment_term + cert.components.log_term;
  return cert;
}

RegressionResult regress(const RegressionProblem& problem, double alpha, double delta,
                         const ProblemMoments* analytic, std::uint64_t seed,
                         const OptimizerBudget& budget) {
  const double epsilon_net = 1.0 / static_cast<double>(problem.n());
  const double covering_log = covering_number_log(problem.d(), problem.radius_r(), epsilon_net);
  const double beta = tune_beta_regression(problem.n(), covering_log, delta, alpha);

  RegressionResult result{};
  result.moments_estimated = analytic == nullptr;
  result.moments = analytic != nullptr ? *analytic : empirical_moments(problem, alpha);

  const RiskConfig cfg(alpha, beta, delta, epsilon_net);
  result.opt = minimize_truncated_risk(problem, cfg, budget, seed);
  result.certificate = excess_risk_bound(result.moments, alpha, delta, problem.n(), problem.d(),
                                         problem.radius_r(), epsilon_net);
  result.certificate.theta_hat = result.opt.theta;
  return result;
}

// --- synthetic data laws -------------------------------------------------

PlantedRegressionLaw::PlantedRegressionLaw(std::vector<double> theta_star, XDesign design,
                                           NoiseKind noise, double noise_shape)
    : theta_star_(std::move(theta_star)),
      design_(design),
      noise_(noise),
      noise_shape_(noise_shape) {
  if (theta_star_.empty()) throw std::invalid_argument("theta_star must be non-empty");
  for (double t : theta_star_) {
    if (!std::isfinite(t)) throw std::invalid_argument("theta_star has a non-finite entry");
  }
  if (noise_ == NoiseKind::kSymmetricLomax && !(noise_shape_ > 1.0)) {
    throw std::domain_error("symmetric_lomax noise needs shape > 1 for a finite mean");
  }
}

void PlantedRegressionLaw::sample(SplitMix64& rng, double* x_out, double* y_out) const {
  const std::int64_t d = dim();
  double fit = 0.0;
  for (std::int64_t k = 0; k < d; ++k) {
    const double coord =
        design_ == XDesign::kRademacher ? (rng.uniform01() < 0.5 ? -1.0 : 1.0) : gaussian_draw(rng);
    x_out[k] = coord;
    fit += coord * theta_star_[static_cast<std::size_t>(k)];
  }
  double noise = 0.0;
  switch (noise_) {
    case NoiseKind::kNone:
      break;
    case NoiseKind::kRademacherSign:
      noise = rng.uniform01() < 0.5 ? -1.0 : 1.0;
      break;
    case NoiseKind::kSymmetricLomax: {
      const double u = rng.uniform01();
      const double w = 2.0 * std::min(u, 1.0 - u);
      const double magnitude = std::pow(w, -1.0 / noise_shape_) - 1.0;
      noise = u < 0.5 ? -magnitude : magnitude;
      break;
    }
  }
  *y_out = fit + noise;
}

RegressionProblem PlantedRegressionLaw::make_problem(std::int64_t n, double radius_r,
                                                     SplitMix64& rng) const {
  const std::int64_t d = dim();
  std::vector<double> xs(static_cast<std::size_t>(n * d));
  std::vector<double> ys(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) sample(rng, xs.data() + i * d, &ys[static_cast<std::size_t>(i)]);
  return RegressionProblem(std::move(xs), std::move(ys), d, radius_r);
}

double PlantedRegressionLaw::noise_mean_abs() const {
  switch (noise_) {
    case NoiseKind::kNone:
      return 0.0;
    case NoiseKind::kRademacherSign:
      return 1.0;
    case NoiseKind::kSymmetricLomax:
      return 1.0 / (noise_shape_ - 1.0);
  }
  return 0.0;
}

double PlantedRegressionLaw::noise_abs_moment(double exponent) const {
  switch (noise_) {
    case NoiseKind::kNone:
      return 0.0;
    case NoiseKind::kRademacherSign:
      return 1.0;
    case NoiseKind::kSymmetricLomax: {
      if (!(exponent < noise_shape_)) {
        throw std::domain_error("symmetric_lomax |Z|^a moment diverges for a >= shape");
      }
      // E |Z|^a = Gamma(a+1) Gamma(c-a) / Gamma(c) for Lomax shape c.
      return std::exp(std::lgamma(exponent + 1.0) + std::lgamma(noise_shape_ - exponent) -
                      std::lgamma(noise_shape_));
    }
  }
  return 0.0;
}

double PlantedRegressionLaw::noise_mean_abs_dev(double t) const {
  const double at = std::fabs(t);
  switch (noise_) {
    case NoiseKind::kNone:
      return at;
    case NoiseKind::kRademacherSign:
      return std::max(1.0, at);
    case NoiseKind::kSymmetricLomax: {
      const double c = noise_shape_;
      return at + std::pow(1.0 + at, 1.0 - c) / (c - 1.0);
    }
  }
  return at;
}

namespace {

constexpr std::int64_t kMaxEnumDim = 20;  // 2^d sign patterns enumerated below

}  // namespace

ProblemMoments PlantedRegressionLaw::analytic_moments(double alpha, double radius_r) const {
  detail::require_alpha(alpha);
  const double d = static_cast<double>(dim());

  double e_abs_x = 0.0;
  double e_abs_x_alpha = 0.0;
  double e_fit_alpha = 0.0;  // E |x^T theta_star|^alpha
  if (design_ == XDesign::kRademacher) {
    e_abs_x = std::sqrt(d);
    e_abs_x_alpha = std::pow(d, alpha / 2.0);
    if (dim() > kMaxEnumDim) {
      throw std::domain_error("closed-form rademacher moments limited to d <= 20");
    }
    const std::uint64_t patterns = 1ULL << dim();
    for (std::uint64_t bits = 0; bits < patterns; ++bits) {
      double fit = 0.0;
      for (std::int64_t k = 0; k < dim(); ++k) {
        fit += ((bits >> k) & 1ULL ? 1.0 : -1.0) * theta_star_[static_cast<std::size_t>(k)];
      }
      e_fit_alpha += detail::pow_abs(fit, alpha);
    }
    e_fit_alpha /= static_cast<double>(patterns);
  } else {
    // |x| is chi with d degrees of freedom; x^T theta_star is centered
    // Gaussian with variance |theta_star|^2.
    e_abs_x = std::numbers::sqrt2 * std::exp(std::lgamma((d + 1.0) / 2.0) - std::lgamma(d / 2.0));
    e_abs_x_alpha =
        std::pow(2.0, alpha / 2.0) * std::exp(std::lgamma((d + alpha) / 2.0) - std::lgamma(d / 2.0));
    const double norm_star = norm2(theta_star_);
    e_fit_alpha = detail::pow_abs(norm_star, alpha) * std::pow(2.0, alpha / 2.0) *
                  std::exp(std::lgamma((1.0 + alpha) / 2.0)) / std::sqrt(std::numbers::pi);
  }

  const double pow2 = std::pow(2.0, alpha - 1.0);
  // Triangle-inequality chain; an upper bound, not the exact supremum.
  const double e_y_alpha_ub = pow2 * (e_fit_alpha + noise_abs_moment(alpha));
  ProblemMoments m{};
  m.e_abs_x = e_abs_x;
  m.e_abs_x_alpha = e_abs_x_alpha;
  m.sup_r_alpha = pow2 * (e_y_alpha_ub + detail::pow_abs(radius_r, alpha) * e_abs_x_alpha);
  return m;
}

bool PlantedRegressionLaw::has_closed_form_risk() const {
  return design_ == XDesign::kRademacher && dim() <= kMaxEnumDim;
}

double PlantedRegressionLaw::l1_risk(std::span<const double> theta) const {
  if (static_cast<std::int64_t>(theta.size()) != dim()) {
    throw std::invalid_argument("theta dimension does not match the law");
  }
  if (!has_closed_form_risk()) {
    throw std::domain_error("closed-form l1 risk only available for rademacher designs, d <= 20");
  }
  const std::uint64_t patterns = 1ULL << dim();
  double total = 0.0;
  for (std::uint64_t bits = 0; bits < patterns; ++bits) {
    double displaced = 0.0;
    for (std::int64_t k = 0; k < dim(); ++k) {
      const double sign = (bits >> k) & 1ULL ? 1.0 : -1.0;
      displaced += sign * (theta[static_cast<std::size_t>(k)] -
                           theta_star_[static_cast<std::size_t>(k)]);
    }
    total += noise_mean_abs_dev(displaced);
  }
  return total / static_cast<double>(patterns);
}

PlantedRegressionLaw::McEstimate PlantedRegressionLaw::l1_risk_mc(std::span<const double> theta,
                                                                  std::int64_t samples,
                                                                  std::uint64_t seed) const {
  if (samples < 2) throw std::domain_error("l1_risk_mc needs at least 2 samples");
  if (static_cast<std::int64_t>(theta.size()) != dim()) {
    throw std::invalid_argument("theta dimension does not match the law");
  }
  SplitMix64 rng(seed);
  std::vector<double> x(static_cast<std::size_t>(dim()));
  double y = 0.0;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    sample(rng, x.data(), &y);
    double fit = 0.0;
    for (std::int64_t k = 0; k < dim(); ++k) fit += x[static_cast<std::size_t>(k)] * theta[static_cast<std::size_t>(k)];
    const double loss = std::fabs(y - fit);
    sum += loss;
    sum_sq += loss * loss;
  }
  const double dn = static_cast<double>(samples);
  const double mean = sum / dn;
  const double variance = std::max(0.0, sum_sq / dn - mean * mean);
  return McEstimate{mean, std::sqrt(variance / dn)};
}

PlantedRegressionLaw::McEstimate PlantedRegressionLaw::l1_excess_mc(
    std::span<const double> theta, std::span<const double> theta_ref, std::int64_t samples,
    std::uint64_t seed) const {
  if (samples < 2) throw std::domain_error("l1_excess_mc needs at least 2 samples");
  if (static_cast<std::int64_t>(theta.size()) != dim() ||
      static_cast<std::int64_t>(theta_ref.size()) != dim()) {
    throw std::invalid_argument("theta dimension does not match the law");
  }
  SplitMix64 rng(seed);
  std::vector<double> x(static_cast<std::size_t>(dim()));
  double y = 0.0;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    sample(rng, x.data(), &y);
    double fit = 0.0;
    double fit_ref = 0.0;
    for (std::int64_t k = 0; k < dim(); ++k) {
      fit += x[static_cast<std::size_t>(k)] * theta[static_cast<std::size_t>(k)];
      fit_ref += x[static_cast<std::size_t>(k)] * theta_ref[static_cast<std::size_t>(k)];
    }
    const double diff = std::fabs(y - fit) - std::fabs(y - fit_ref);
    sum += diff;
    sum_sq += diff * diff;
  }
  const double dn = static_cast<double>(samples);
  const double mean = sum / dn;
  const double variance = std::max(0.0, sum_sq / dn - mean * mean);
  return McEstimate{mean, std::sqrt(variance / dn)};
}

namespace {

const nlohmann::json& require_field(const nlohmann::json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) {
    throw ParseError(std::string("regression law JSON is missing field \"") + name + "\"");
  }
  return *it;
}

}  // namespace

PlantedRegressionLaw PlantedRegressionLaw::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid regression law JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("regression law JSON must be an object");
  const std::string kind = require_field(doc, "kind").get<std::string>();
  if (kind != "planted_regression") {
    throw ParseError("unknown regression law kind \"" + kind + "\"");
  }

  const nlohmann::json& star = require_field(doc, "theta_star");
  if (!star.is_array() || star.empty()) {
    throw ParseError("regression law JSON field \"theta_star\" must be a non-empty array");
  }
  std::vector<double> theta_star;
  for (const auto& entry : star) {
    if (!entry.is_number()) throw ParseError("theta_star entries must be numbers");
    theta_star.push_back(entry.get<double>());
  }

  XDesign design = XDesign::kRademacher;
  if (doc.contains("x")) {
    const std::string name = doc["x"].get<std::string>();
    if (name == "rademacher") {
      design = XDesign::kRademacher;
    } else if (name == "gaussian") {
      design = XDesign::kGaussian;
    } else {
      throw ParseError("unknown x design \"" + name + "\"");
    }
  }

  NoiseKind noise = NoiseKind::kNone;
  double shape = 0.0;
  if (doc.contains("noise")) {
    const nlohmann::json& noise_doc = doc["noise"];
    if (!noise_doc.is_object()) throw ParseError("noise must be an object");
    const std::string name = require_field(noise_doc, "kind").get<std::string>();
    if (name == "none") {
      noise = NoiseKind::kNone;
    } else if (name == "rademacher_sign") {
      noise = NoiseKind::kRademacherSign;
    } else if (name == "symmetric_lomax") {
      noise = NoiseKind::kSymmetricLomax;
      shape = require_field(noise_doc, "shape").get<double>();
    } else {
      throw ParseError("unknown noise kind \"" + name + "\"");
    }
  }
  return PlantedRegressionLaw(std::move(theta_star), design, noise, shape);
}

std::string PlantedRegressionLaw::to_json() const {
  std::string out = "{\"kind\":\"planted_regression\",\"theta_star\":[";
  for (std::size_t k = 0; k < theta_star_.size(); ++k) {
    if (k > 0) out += ',';
    out += format_g17(theta_star_[k]);
  }
  out += "],\"x\":\"";
  out += design_ == XDesign::kRademacher ? "rademacher" : "gaussian";
  out += "\",\"noise\":{\"kind\":\"";
  switch (noise_) {
    case NoiseKind::kNone:
      out += "none\"}";
      break;
    case NoiseKind::kRademacherSign:
      out += "rademacher_sign\"}";
      break;
    case NoiseKind::kSymmetricLomax:
      out += "symmetric_lomax\",\"shape\":" + format_g17(noise_shape_) + "}";
      break;
  }
  out += "}";
  return out;
}

}  // namespace catoni
