#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "core/influence.hpp"
#include "oracle.hpp"

using catoni::phi_envelope;
using catoni::phi_widest;

namespace {

std::vector<double> grid(double lo, double hi, int points) {
  std::vector<double> out;
  out.reserve(points);
  for (int i = 0; i < points; ++i) {
    out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1));
  }
  return out;
}

}  // namespace

TEST_CASE("phi_widest at fixed points") {
  CHECK(phi_widest(0.0, 1.5) == 0.0);
  CHECK(phi_widest(1.0, 1.5) == doctest::Approx(std::log(8.0 / 3.0)).epsilon(1e-15));
  CHECK(phi_widest(1.0, 1.5) == doctest::Approx(oracle::phi_widest(1.0, 1.5)).epsilon(1e-14));
  CHECK(phi_widest(-3.7, 1.8) == doctest::Approx(oracle::phi_widest(-3.7, 1.8)).epsilon(1e-14));
}

TEST_CASE("phi_widest is exactly odd") {
  CHECK(phi_widest(-2.0, 1.5) == -phi_widest(2.0, 1.5));
  for (double alpha : {1.1, 1.5, 1.9}) {
    for (double x : grid(0.0, 50.0, 501)) {
      CHECK(phi_widest(-x, alpha) == -phi_widest(x, alpha));
    }
  }
}

TEST_CASE("phi_widest rejects bad arguments") {
  CHECK_THROWS_AS(phi_widest(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(phi_widest(1.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(phi_widest(1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(phi_widest(1.0, 2.5), std::domain_error);
  CHECK_THROWS_AS(phi_widest(std::nan(""), 1.5), std::domain_error);
  CHECK_THROWS_AS(phi_widest(std::numeric_limits<double>::infinity(), 1.5), std::domain_error);
  CHECK_THROWS_AS(phi_envelope(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(phi_envelope(std::nan(""), 1.5), std::domain_error);
}

TEST_CASE("phi_envelope at fixed points") {
  const auto at_zero = phi_envelope(0.0, 1.3);
  CHECK(at_zero.lower == 0.0);
  CHECK(at_zero.upper == 0.0);

  const auto at_one = phi_envelope(1.0, 1.5);
  CHECK(at_one.lower == doctest::Approx(std::log(1.5)).epsilon(1e-15));
  CHECK(at_one.upper == doctest::Approx(std::log(8.0 / 3.0)).epsilon(1e-15));
  CHECK(at_one.lower == doctest::Approx(oracle::phi_envelope_lower(1.0, 1.5)).epsilon(1e-14));
  CHECK(at_one.upper == doctest::Approx(oracle::phi_envelope_upper(1.0, 1.5)).epsilon(1e-14));
}

TEST_CASE("phi_widest lies inside the envelope, touching the active side") {
  const auto xs = grid(-50.0, 50.0, 1001);
  for (double alpha : {1.1, 1.2, 1.3, 1.4, 1.5, 1.6, 1.7, 1.8, 1.9}) {
    for (double x : xs) {
      const double phi = phi_widest(x, alpha);
      const auto env = phi_envelope(x, alpha);
      CHECK(env.lower <= env.upper);
      CHECK(phi >= env.lower - 1e-12 * std::fabs(env.lower));
      CHECK(phi <= env.upper + 1e-12 * std::fabs(env.upper));
      if (x >= 0.0) {
        CHECK(phi == env.upper);  // the widest choice is the upper curve here
      } else {
        CHECK(phi == env.lower);
      }
    }
  }
}

TEST_CASE("phi_widest is strictly increasing") {
  for (double alpha : {1.1, 1.5, 1.9}) {
    const auto xs = grid(-50.0, 50.0, 2001);
    for (std::size_t i = 1; i < xs.size(); ++i) {
      if (xs[i] - xs[i - 1] > 1e-9) {
        CHECK(phi_widest(xs[i - 1], alpha) < phi_widest(xs[i], alpha));
      }
    }
  }
}

TEST_CASE("phi_widest sub-linearity anchor on x >= 0") {
  for (double alpha : {1.1, 1.5, 1.9}) {
    for (double x : grid(0.0, 50.0, 501)) {
      const double linear = x + std::pow(x, alpha) / alpha;
      CHECK(phi_widest(x, alpha) <= linear + 1e-12 * std::max(1.0, linear));
    }
  }
}
