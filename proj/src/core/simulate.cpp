#include "core/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "core/bounds.hpp"
#include "core/mestimator.hpp"

namespace catoni {

double binomial_std_error(double p_hat, std::int64_t trials) {
  return std::sqrt(std::max(0.0, p_hat * (1.0 - p_hat)) / static_cast<double>(trials));
}

SimulationResult run_simulation(const SimulationConfig& config) {
  if (config.trials < 1) throw std::domain_error("simulation needs at least one trial");
  if (config.n < 1) throw std::domain_error("simulation needs n >= 1");

  const double alpha = law_alpha(config.law);
  const double v = law_v(config.law);
  const double m = law_mean(config.law);
  const AlphaParams params(alpha, v);

  SimulationResult result{};
  result.trials = config.trials;
  result.beta = tune_beta(params, config.n, config.epsilon);
  result.m_estimator_bound = deviation_bound(params, config.n, config.epsilon);
  result.empirical_upper = empirical_mean_upper(alpha, v, config.n, config.epsilon);
  result.empirical_lower_eta = empirical_mean_lower(alpha, v, config.n, config.epsilon);

  // One flag slot per trial; threads only partition the index range, so the
  // reduction below never depends on scheduling.
  std::vector<std::uint8_t> hit_mest(static_cast<std::size_t>(config.trials));
  std::vector<std::uint8_t> hit_upper(static_cast<std::size_t>(config.trials));
  std::vector<std::uint8_t> hit_lower(static_cast<std::size_t>(config.trials));

  const auto run_range = [&](std::int64_t begin, std::int64_t end) {
    std::vector<double> draws(static_cast<std::size_t>(config.n));
    for (std::int64_t trial = begin; trial < end; ++trial) {
      SplitMix64 rng = SplitMix64::for_trial(config.seed, static_cast<std::uint64_t>(trial));
      for (double& x : draws) x = law_sample(config.law, rng);
      const SampleBatch batch(draws);
      const double theta_hat =
          solve_theta_hat(batch, result.beta, alpha, default_root_tol(batch));
      const double mean = batch.mean();
      hit_mest[static_cast<std::size_t>(trial)] =
          std::fabs(theta_hat - m) >= result.m_estimator_bound ? 1 : 0;
      hit_upper[static_cast<std::size_t>(trial)] =
          std::fabs(mean - m) >= result.empirical_upper ? 1 : 0;
      hit_lower[static_cast<std::size_t>(trial)] =
          std::fabs(mean - m) >= result.empirical_lower_eta ? 1 : 0;
    }
  };

  int threads = config.threads;
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(config.trials)));

  if (threads == 1) {
    run_range(0, config.trials);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    const std::int64_t chunk = (config.trials + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::int64_t begin = t * chunk;
      const std::int64_t end = std::min<std::int64_t>(begin + chunk, config.trials);
      if (begin >= end) break;
      pool.emplace_back(run_range, begin, end);
    }
    for (std::thread& worker : pool) worker.join();
  }

  for (std::int64_t trial = 0; trial < config.trials; ++trial) {
    result.exceed_m_estimator += hit_mest[static_cast<std::size_t>(trial)];
    result.exceed_empirical_upper += hit_upper[static_cast<std::size_t>(trial)];
    result.exceed_empirical_lower += hit_lower[static_cast<std::size_t>(trial)];
  }
  return result;
}

}  // namespace catoni
