#pragma once

#include <cstdint>

#include "core/distributions.hpp"

namespace catoni {

struct SimulationConfig {
  Law law;
  std::int64_t n;
  double epsilon;
  std::int64_t trials;
  std::uint64_t seed;
  int threads = 1;  // <= 0 picks the hardware concurrency
};

// Exceedance counts for the three deviation claims, plus the thresholds the
// trials were checked against. Counts are exact integers, so results are
// identical for any thread count.
struct SimulationResult {
  std::int64_t trials;
  double beta;
  double m_estimator_bound;
  double empirical_upper;
  double empirical_lower_eta;
  std::int64_t exceed_m_estimator;
  std::int64_t exceed_empirical_upper;
  std::int64_t exceed_empirical_lower;

  double coverage_mestimator() const {
    return static_cast<double>(exceed_m_estimator) / static_cast<double>(trials);
  }
  double coverage_empirical_upper() const {
    return static_cast<double>(exceed_empirical_upper) / static_cast<double>(trials);
  }
  double hit_rate_lower() const {
    return static_cast<double>(exceed_empirical_lower) / static_cast<double>(trials);
  }
};

// Binomial standard error sqrt(p (1-p) / trials).
double binomial_std_error(double p_hat, std::int64_t trials);

// Per trial: draw n samples from the law (stream seeded by seed XOR trial
// index), solve theta_hat with the tuned beta, and record whether
// |theta_hat - m| and |mean - m| exceed their respective thresholds.
SimulationResult run_simulation(const SimulationConfig& config);

}  // namespace catoni
