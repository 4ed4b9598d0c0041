#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "core/errors.hpp"
#include "core/influence.hpp"
#include "core/regression.hpp"
#include "core/rng.hpp"
#include "oracle.hpp"

using namespace catoni;

namespace {

PlantedRegressionLaw lomax_law(std::vector<double> theta_star, double shape = 1.75) {
  return PlantedRegressionLaw(std::move(theta_star), XDesign::kRademacher,
                              NoiseKind::kSymmetricLomax, shape);
}

}  // namespace

TEST_CASE("truncated_risk fixed points") {
  // Perfect fit: every residual is zero.
  RegressionProblem exact({1.0, 2.0, -1.0, 0.5, 3.0, -2.0}, {0.0, 0.0, 0.0}, 2, 5.0);
  {
    std::vector<double> ys(3);
    for (int i = 0; i < 3; ++i) {
      const auto row = exact.x_row(i);
      ys[static_cast<std::size_t>(i)] = 2.0 * row[0] - 1.0 * row[1];
    }
    RegressionProblem fit({1.0, 2.0, -1.0, 0.5, 3.0, -2.0}, ys, 2, 5.0);
    const std::vector<double> theta{2.0, -1.0};
    CHECK(truncated_risk(theta, fit, 0.7, 1.5) == 0.0);
  }

  // Single point x = e1, y = 1, theta = 0: risk = phi(beta)/beta at beta = 1.
  RegressionProblem single({1.0, 0.0}, {1.0}, 2, 1.0);
  const std::vector<double> origin{0.0, 0.0};
  CHECK(truncated_risk(origin, single, 1.0, 1.5) ==
        doctest::Approx(std::log(8.0 / 3.0)).epsilon(1e-14));
  CHECK(truncated_risk(origin, single, 1.0, 1.5) ==
        doctest::Approx(oracle::phi_widest(1.0, 1.5)).epsilon(1e-13));
}

TEST_CASE("truncated_risk is permutation invariant and validates dimensions") {
  SplitMix64 rng(11);
  const auto law = lomax_law({0.4, -0.2});
  RegressionProblem problem = law.make_problem(64, 1.0, rng);

  std::vector<double> xs;
  std::vector<double> ys;
  for (std::int64_t i = problem.n() - 1; i >= 0; --i) {
    const auto row = problem.x_row(i);
    xs.insert(xs.end(), row.begin(), row.end());
    ys.push_back(problem.y(i));
  }
  RegressionProblem reversed(std::move(xs), std::move(ys), 2, 1.0);
  const std::vector<double> theta{0.1, 0.3};
  CHECK(truncated_risk(theta, problem, 0.2, 1.5) ==
        doctest::Approx(truncated_risk(theta, reversed, 0.2, 1.5)).epsilon(1e-12));

  const std::vector<double> wrong{0.1};
  CHECK_THROWS_AS(truncated_risk(wrong, problem, 0.2, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(truncated_risk(theta, problem, 0.0, 1.5), std::domain_error);
}

TEST_CASE("minimizer recovers a noiseless line") {
  // y = 2 x on a 1-d grid, radius 3: zero risk at theta = 2.
  std::vector<double> xs;
  std::vector<double> ys;
  for (int i = -10; i <= 10; ++i) {
    xs.push_back(0.1 * i);
    ys.push_back(0.2 * i);
  }
  RegressionProblem problem(std::move(xs), std::move(ys), 1, 3.0);
  const RiskConfig cfg(1.5, 0.5, 0.1, 0.01);
  const MinimizeResult result = minimize_truncated_risk(problem, cfg, OptimizerBudget{}, 7);
  REQUIRE(result.theta.size() == 1);
  CHECK(std::fabs((result.theta[0]) - (2.0)) <= 1e-5);
  CHECK(result.risk <= 1e-8);
  CHECK_FALSE(result.budget_exhausted);
}

TEST_CASE("minimizer matches a dense grid oracle in 2-d") {
  SplitMix64 rng(4001);
  const auto law = lomax_law({0.5, -0.3});
  RegressionProblem problem = law.make_problem(300, 1.0, rng);
  const double beta = tune_beta_regression(problem.n(), covering_number_log(2, 1.0, 1.0 / 300.0),
                                           0.1, 1.5);
  const RiskConfig cfg(1.5, beta, 0.1, 1.0 / 300.0);
  const MinimizeResult result = minimize_truncated_risk(problem, cfg, OptimizerBudget{}, 17);

  const double step = 1.0 / 100.0;
  double best_grid = 1e300;
  std::vector<double> grid_theta{0.0, 0.0};
  std::vector<double> probe(2);
  for (double a = -1.0; a <= 1.0 + 1e-12; a += step) {
    for (double b = -1.0; b <= 1.0 + 1e-12; b += step) {
      if (a * a + b * b > 1.0) continue;
      probe[0] = a;
      probe[1] = b;
      const double risk = truncated_risk(probe, problem, beta, 1.5);
      if (risk < best_grid) {
        best_grid = risk;
        grid_theta = probe;
      }
    }
  }
  CHECK(result.risk <= best_grid + 1e-9);
  CHECK(std::fabs(result.theta[0] - grid_theta[0]) <= step);
  CHECK(std::fabs(result.theta[1] - grid_theta[1]) <= step);
}

TEST_CASE("minimizer recovers a planted signal under heavy-tailed noise") {
  SplitMix64 rng(5150);
  const auto law = lomax_law({0.5, -0.3});
  RegressionProblem problem = law.make_problem(2000, 1.0, rng);
  const double beta = tune_beta_regression(
      problem.n(), covering_number_log(2, 1.0, 1.0 / 2000.0), 0.1, 1.5);
  const RiskConfig cfg(1.5, beta, 0.1, 1.0 / 2000.0);
  const MinimizeResult result = minimize_truncated_risk(problem, cfg, OptimizerBudget{}, 23);
  CHECK(std::fabs(result.theta[0] - 0.5) < 0.15);
  CHECK(std::fabs(result.theta[1] + 0.3) < 0.15);
}

TEST_CASE("minimizer reports an exhausted budget") {
  SplitMix64 rng(88);
  const auto law = lomax_law({0.2});
  RegressionProblem problem = law.make_problem(50, 1.0, rng);
  OptimizerBudget tiny;
  tiny.max_risk_evals = 10;
  const RiskConfig cfg(1.5, 0.3, 0.1, 0.02);
  const MinimizeResult result = minimize_truncated_risk(problem, cfg, tiny, 3);
  CHECK(result.budget_exhausted);
  CHECK(result.risk_evals <= 12);  // initial evaluations may finish the last probe
}

TEST_CASE("scaling data by lambda and beta by 1/lambda fixes the minimizer") {
  SplitMix64 rng(202);
  const auto law = lomax_law({0.4, 0.1});
  RegressionProblem problem = law.make_problem(400, 1.0, rng);
  const double beta = 0.15;
  const RiskConfig cfg(1.5, beta, 0.1, 0.01);
  const MinimizeResult base = minimize_truncated_risk(problem, cfg, OptimizerBudget{}, 41);

  const double lambda = 2.0;
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::int64_t i = 0; i < problem.n(); ++i) {
    const auto row = problem.x_row(i);
    for (double value : row) xs.push_back(lambda * value);
    ys.push_back(lambda * problem.y(i));
  }
  RegressionProblem scaled(std::move(xs), std::move(ys), 2, lambda * 1.0);
  const RiskConfig scaled_cfg(1.5, beta / lambda, 0.1, 0.01);
  const MinimizeResult rescaled = minimize_truncated_risk(scaled, scaled_cfg, OptimizerBudget{}, 41);

  CHECK(std::fabs((rescaled.theta[0]) - (base.theta[0])) <= 1e-4);
  CHECK(std::fabs((rescaled.theta[1]) - (base.theta[1])) <= 1e-4);
  // The scaled problem evaluates each phi at the same arguments, so risks
  // relate by the factor lambda.
  CHECK(rescaled.risk == doctest::Approx(lambda * base.risk).epsilon(1e-6));
}

TEST_CASE("covering_number_log closed form") {
  CHECK(std::fabs((covering_number_log(1, 1.0, 6.0)) - (0.0)) <= 1e-15);
  CHECK(covering_number_log(3, 2.0, 1.0) == doctest::Approx(3.0 * std::log(12.0)).epsilon(1e-14));
  CHECK(covering_number_log(3, 2.0, 1.0) ==
        doctest::Approx(oracle::covering_number_log(3, 2.0, 1.0)).epsilon(1e-13));
  CHECK(covering_number_log(4, 2.0, 0.5) > covering_number_log(3, 2.0, 0.5));
  CHECK(covering_number_log(3, 3.0, 0.5) > covering_number_log(3, 2.0, 0.5));
  CHECK(covering_number_log(3, 2.0, 0.25) > covering_number_log(3, 2.0, 0.5));
  CHECK_THROWS_AS(covering_number_log(0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(covering_number_log(2, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(covering_number_log(2, 1.0, 0.0), std::domain_error);
}

TEST_CASE("tune_beta_regression closed form") {
  CHECK(tune_beta_regression(1000, 0.0, 1.0 / std::numbers::e, 1.5) ==
        doctest::Approx(std::pow(2.0 / 1000.0, 1.0 / 1.5)).epsilon(1e-14));
  const double covering = covering_number_log(2, 1.0, 1.0 / 2000.0);
  CHECK(tune_beta_regression(2000, covering, 0.1, 1.5) ==
        doctest::Approx(oracle::tune_beta_regression(2000, covering, 0.1, 1.5)).epsilon(1e-13));
  CHECK(tune_beta_regression(2000, covering + 1.0, 0.1, 1.5) >
        tune_beta_regression(2000, covering, 0.1, 1.5));
  CHECK_THROWS_AS(tune_beta_regression(2000, covering, 0.5, 1.5), std::domain_error);
  CHECK_THROWS_AS(tune_beta_regression(2000, covering, 0.0, 1.5), std::domain_error);
}

TEST_CASE("excess_risk_bound components, oracle value, and n-scaling") {
  const ProblemMoments moments{1.41, 1.68, 13.7};
  const auto bound_at = [&](std::int64_t n) {
    return excess_risk_bound(moments, 1.5, 0.1, n, 2, 1.0, 1.0 / static_cast<double>(n));
  };
  const ExcessRiskCertificate cert = bound_at(2000);
  CHECK(cert.components.net_term > 0.0);
  CHECK(cert.components.moment_term > 0.0);
  CHECK(cert.components.log_term > 0.0);
  CHECK(cert.bound_value == doctest::Approx(cert.components.net_term +
                                            cert.components.moment_term +
                                            cert.components.log_term)
                                .epsilon(1e-15));
  CHECK(cert.covering_log == doctest::Approx(2.0 * std::log(6.0 * 2000.0)).epsilon(1e-14));
  CHECK(cert.bound_value ==
        doctest::Approx(oracle::excess_risk_bound(1.41, 1.68, 13.7, 1.5, 0.1, 2000, 2, 1.0,
                                                  1.0 / 2000.0))
            .epsilon(1e-12));

  // Dominant-term scaling: bound(n)/bound(16n) approaches 16^((a-1)/a).
  const double ratio = bound_at(100000).bound_value / bound_at(1600000).bound_value;
  CHECK(std::fabs(ratio / std::pow(16.0, 1.0 / 3.0) - 1.0) < 0.10);

  ProblemMoments missing{std::nan(""), 1.0, 1.0};
  CHECK_THROWS_AS(excess_risk_bound(missing, 1.5, 0.1, 2000, 2, 1.0, 5e-4),
                  std::invalid_argument);
}

TEST_CASE("planted law closed-form risk against direct noise facts") {
  // Sign noise: R(theta) = mean over sign patterns of max(1, |displacement|),
  // so the risk at theta_star is E|Z| = 1 and grows like |t| afterwards.
  const PlantedRegressionLaw sign_law({0.0}, XDesign::kRademacher, NoiseKind::kRademacherSign,
                                      0.0);
  const std::vector<double> at_star{0.0};
  CHECK(sign_law.l1_risk(at_star) == doctest::Approx(1.0).epsilon(1e-15));
  const std::vector<double> off{0.5};
  CHECK(sign_law.l1_risk(off) == doctest::Approx(1.0).epsilon(1e-15));
  const std::vector<double> far{2.5};
  CHECK(sign_law.l1_risk(far) == doctest::Approx(2.5).epsilon(1e-15));

  // Monte Carlo agrees with the closed form within 4 standard errors even
  // for the two-point noise.
  const auto mc = sign_law.l1_risk_mc(far, 1000000, 909);
  CHECK(std::fabs(mc.value - 2.5) <= 4.0 * mc.std_error + 1e-12);

  // theta_star minimizes the closed-form risk for the lomax noise.
  const auto law = lomax_law({0.5, -0.3});
  const std::vector<double> star{0.5, -0.3};
  const double risk_star = law.l1_risk(star);
  CHECK(risk_star == doctest::Approx(law.noise_mean_abs()).epsilon(1e-13));
  for (double da : {-0.4, -0.1, 0.1, 0.4}) {
    for (double db : {-0.3, 0.0, 0.3}) {
      const std::vector<double> probe{0.5 + da, -0.3 + db};
      CHECK(law.l1_risk(probe) >= risk_star - 1e-13);
    }
  }
}

TEST_CASE("lomax noise moments match an independent quadrature") {
  const auto law = lomax_law({0.0}, 1.75);
  CHECK(law.noise_mean_abs() == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(law.noise_abs_moment(1.5) ==
        doctest::Approx(oracle::lomax_abs_moment(1.5, 1.75)).epsilon(1e-12));

  // Simpson quadrature of E|Z|^a = a * integral of z^(a-1) (1+z)^(-c) dz.
  // Substituting w = 1/(1+z) and then w = s^(1/(c-a)) removes the endpoint
  // singularity, leaving a * p * integral of (1 - s^p)^(a-1) ds with
  // p = 1/(c-a), which is smooth on [0, 1].
  const double a = 1.5;
  const double c = 1.75;
  const double p = 1.0 / (c - a);
  const auto integrand = [&](double s) { return std::pow(1.0 - std::pow(s, p), a - 1.0); };
  const int panels = 20000;
  double sum = 0.0;
  const double h = 1.0 / panels;
  for (int i = 0; i < panels; ++i) {
    const double s0 = i * h;
    sum += (integrand(s0) + 4.0 * integrand(s0 + 0.5 * h) + integrand(s0 + h)) * h / 6.0;
  }
  CHECK(law.noise_abs_moment(a) == doctest::Approx(a * p * sum).epsilon(1e-6));
  CHECK_THROWS_AS(law.noise_abs_moment(1.8), std::domain_error);
}

TEST_CASE("analytic moments for the rademacher design") {
  const auto law = lomax_law({0.5, -0.3});
  const ProblemMoments m = law.analytic_moments(1.5, 1.0);
  CHECK(m.e_abs_x == doctest::Approx(std::numbers::sqrt2).epsilon(1e-14));
  CHECK(m.e_abs_x_alpha == doctest::Approx(std::pow(2.0, 0.75)).epsilon(1e-14));

  const double pow2 = std::pow(2.0, 0.5);
  const double e_fit = (std::pow(0.2, 1.5) + std::pow(0.8, 1.5)) / 2.0;
  const double e_y_ub = pow2 * (e_fit + law.noise_abs_moment(1.5));
  const double expected_sup = pow2 * (e_y_ub + std::pow(2.0, 0.75));
  CHECK(m.sup_r_alpha == doctest::Approx(expected_sup).epsilon(1e-12));
}

TEST_CASE("gaussian design sampling matches its analytic moments") {
  const PlantedRegressionLaw law({0.6, -0.2, 0.1}, XDesign::kGaussian,
                                 NoiseKind::kSymmetricLomax, 1.75);
  const ProblemMoments m = law.analytic_moments(1.5, 1.0);
  // |x| is chi with 3 degrees of freedom.
  CHECK(m.e_abs_x ==
        doctest::Approx(std::numbers::sqrt2 * std::exp(std::lgamma(2.0) - std::lgamma(1.5)))
            .epsilon(1e-13));

  SplitMix64 rng(8088);
  const int draws = 100000;
  std::vector<double> x(3);
  double y = 0.0;
  double sum_norm = 0.0, sum_norm_sq = 0.0, sum_fit = 0.0, sum_fit_sq = 0.0;
  for (int i = 0; i < draws; ++i) {
    law.sample(rng, x.data(), &y);
    const double norm = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    sum_norm += norm;
    sum_norm_sq += norm * norm;
    const double fit = 0.6 * x[0] - 0.2 * x[1] + 0.1 * x[2];
    sum_fit += fit;
    sum_fit_sq += fit * fit;
  }
  const double dn = draws;
  const double norm_mean = sum_norm / dn;
  const double norm_se = std::sqrt((sum_norm_sq / dn - norm_mean * norm_mean) / dn);
  CHECK(std::fabs(norm_mean - m.e_abs_x) <= 4.0 * norm_se);
  // x^T theta_star is centered Gaussian with variance |theta_star|^2.
  const double fit_mean = sum_fit / dn;
  const double fit_var = sum_fit_sq / dn - fit_mean * fit_mean;
  const double var_star = 0.36 + 0.04 + 0.01;
  CHECK(std::fabs(fit_mean) <= 4.0 * std::sqrt(var_star / dn));
  CHECK(fit_var == doctest::Approx(var_star).epsilon(0.05));

  // No closed-form risk for gaussian designs; the MC surrogate still works.
  CHECK_FALSE(law.has_closed_form_risk());
  CHECK_THROWS_AS(law.l1_risk(std::vector<double>{0.0, 0.0, 0.0}), std::domain_error);
  const auto mc = law.l1_risk_mc(std::vector<double>{0.6, -0.2, 0.1}, 50000, 5);
  CHECK(std::fabs(mc.value - law.noise_mean_abs()) <= 6.0 * mc.std_error);
}

TEST_CASE("paired excess estimates are tight even under heavy tails") {
  const auto law = lomax_law({0.5, -0.3});
  const std::vector<double> star{0.5, -0.3};
  const std::vector<double> off{0.45, -0.35};
  const auto paired = law.l1_excess_mc(off, star, 500000, 777);
  const double truth = law.l1_risk(off) - law.l1_risk(star);
  CHECK(truth >= 0.0);
  CHECK(std::fabs(paired.value - truth) <= 4.0 * paired.std_error + 1e-10);
  // The differenced summands are bounded by |x^T (theta - theta_ref)|.
  CHECK(paired.std_error < 1e-3);
}

TEST_CASE("concentration of the truncated risk at theta_star") {
  // Frequency of R_hat_phi(theta*) - R(theta*) exceeding
  // beta^(a-1)/a R_a(theta*) + log(1/delta)/(n beta) stays below delta.
  const auto law = lomax_law({0.5, -0.3});
  const double alpha = 1.5;
  const std::int64_t n = 200;
  const double delta = 0.1;
  const double beta = 0.2;
  const std::vector<double> star{0.5, -0.3};
  const double r_star = law.l1_risk(star);
  const double r_alpha_star = law.noise_abs_moment(alpha);  // residual at theta* is the noise
  const double threshold = std::pow(beta, alpha - 1.0) / alpha * r_alpha_star +
                           std::log(1.0 / delta) / (static_cast<double>(n) * beta);

  const std::int64_t reps = 2000;
  std::int64_t exceed = 0;
  for (std::int64_t rep = 0; rep < reps; ++rep) {
    SplitMix64 rng = SplitMix64::for_trial(606060, static_cast<std::uint64_t>(rep));
    RegressionProblem problem = law.make_problem(n, 1.0, rng);
    const double emp = truncated_risk(star, problem, beta, alpha);
    if (emp - r_star > threshold) ++exceed;
  }
  const double freq = static_cast<double>(exceed) / static_cast<double>(reps);
  const double sigma = std::sqrt(delta * (1.0 - delta) / static_cast<double>(reps));
  CHECK(freq <= delta + 3.0 * sigma);
}

TEST_CASE("population risk of the minimizer stays close to its truncated value") {
  // Frequency of R(theta_hat) - R_hat_phi(theta_hat) exceeding
  // 2 eps E|x| + (2 beta)^(a-1)/a supR + (2 beta)^(a-1) eps^a / a E|x|^a
  //   + log(N/delta)/(n beta) stays below delta.
  const auto law = lomax_law({0.5, -0.3});
  const double alpha = 1.5;
  const std::int64_t n = 200;
  const double delta = 0.1;
  const double radius = 1.0;
  const double eps_net = 1.0 / static_cast<double>(n);
  const double covering = covering_number_log(2, radius, eps_net);
  const double beta = tune_beta_regression(n, covering, delta, alpha);
  const ProblemMoments moments = law.analytic_moments(alpha, radius);

  const double two_beta = std::pow(2.0 * beta, alpha - 1.0);
  const double threshold = 2.0 * eps_net * moments.e_abs_x +
                           two_beta / alpha * moments.sup_r_alpha +
                           two_beta * std::pow(eps_net, alpha) / alpha * moments.e_abs_x_alpha +
                           (covering + std::log(1.0 / delta)) / (static_cast<double>(n) * beta);

  OptimizerBudget budget;
  budget.starts = 4;
  const std::int64_t reps = 300;
  std::int64_t exceed = 0;
  for (std::int64_t rep = 0; rep < reps; ++rep) {
    SplitMix64 rng = SplitMix64::for_trial(515151, static_cast<std::uint64_t>(rep));
    RegressionProblem problem = law.make_problem(n, radius, rng);
    const RiskConfig cfg(alpha, beta, delta, eps_net);
    const MinimizeResult fit = minimize_truncated_risk(problem, cfg, budget, 99 + rep);
    const double population = law.l1_risk(fit.theta);
    if (population - fit.risk > threshold) ++exceed;
  }
  const double freq = static_cast<double>(exceed) / static_cast<double>(reps);
  const double sigma = std::sqrt(delta * (1.0 - delta) / static_cast<double>(reps));
  CHECK(freq <= delta + 3.0 * sigma);
}

TEST_CASE("problem CSV parsing and error reporting") {
  const char* path = "/tmp/catoni_test_problem.csv";
  {
    std::ofstream out(path);
    out << "x_1,x_2,y\n1,2,3\n-1,0.5,2\n";
  }
  const RegressionProblem problem = RegressionProblem::from_csv(path, true, 1.0);
  CHECK(problem.n() == 2);
  CHECK(problem.d() == 2);
  CHECK(problem.y(0) == 3.0);
  CHECK(problem.x_row(1)[0] == -1.0);

  {
    std::ofstream out(path);
    out << "1,2,3\n1,2\n";
  }
  try {
    RegressionProblem::from_csv(path, false, 1.0);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::remove(path);
}

TEST_CASE("regression law JSON round trip") {
  const auto law = PlantedRegressionLaw::from_json(
      R"({"kind":"planted_regression","theta_star":[0.5,-0.3],
          "x":"rademacher","noise":{"kind":"symmetric_lomax","shape":1.75}})");
  CHECK(law.dim() == 2);
  CHECK(law.noise_shape() == 1.75);
  const auto reparsed = PlantedRegressionLaw::from_json(law.to_json());
  CHECK(reparsed.to_json() == law.to_json());

  const auto defaulted =
      PlantedRegressionLaw::from_json(R"({"kind":"planted_regression","theta_star":[1.0]})");
  CHECK(defaulted.noise() == NoiseKind::kNone);
  CHECK(defaulted.design() == XDesign::kRademacher);

  CHECK_THROWS_AS(PlantedRegressionLaw::from_json(R"({"kind":"planted_regression"})"),
                  ParseError);
  CHECK_THROWS_AS(PlantedRegressionLaw::from_json(
                      R"({"kind":"planted_regression","theta_star":[1.0],"x":"sparse"})"),
                  ParseError);
  CHECK_THROWS_AS(
      PlantedRegressionLaw::from_json(
          R"({"kind":"planted_regression","theta_star":[1.0],"noise":{"kind":"cauchy"}})"),
      ParseError);
}

TEST_CASE("regress pipeline wires the pieces together") {
  SplitMix64 rng(31337);
  const auto law = lomax_law({0.5, -0.3});
  RegressionProblem problem = law.make_problem(500, 1.0, rng);
  const ProblemMoments analytic = law.analytic_moments(1.5, 1.0);

  const RegressionResult result = regress(problem, 1.5, 0.1, &analytic, 5, OptimizerBudget{});
  CHECK_FALSE(result.moments_estimated);
  CHECK(result.certificate.theta_hat == result.opt.theta);
  CHECK(result.certificate.bound_value > 0.0);
  CHECK(std::isfinite(result.certificate.bound_value));
  CHECK(result.certificate.beta_used ==
        doctest::Approx(tune_beta_regression(500, covering_number_log(2, 1.0, 1.0 / 500.0), 0.1,
                                             1.5))
            .epsilon(1e-14));

  const RegressionResult plugin = regress(problem, 1.5, 0.1, nullptr, 5, OptimizerBudget{});
  CHECK(plugin.moments_estimated);
  CHECK(plugin.moments.sup_r_alpha > 0.0);
}
