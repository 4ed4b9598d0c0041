#include "core/influence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace catoni {

namespace detail {

void require_alpha(double alpha) {
  if (!(alpha > 1.0 && alpha < 2.0)) {
    throw std::domain_error("alpha must lie in the open interval (1, 2), got " +
                            std::to_string(alpha));
  }
}

double pow_abs(double x, double alpha) {
  const double ax = std::fabs(x);
  if (ax == 0.0) return 0.0;
  return std::exp(alpha * std::log(ax));
}

}  // namespace detail

namespace {

void require_finite_arg(double x, const char* op) {
  if (!std::isfinite(x)) {
    throw std::domain_error(std::string(op) + ": argument must be finite");
  }
}

}  // namespace

AlphaParams::AlphaParams(double alpha_in, double v_in) : alpha(alpha_in), v(v_in) {
  detail::require_alpha(alpha);
  if (!(v >= 0.0)) {
    throw std::domain_error("v must be a nonnegative finite moment, got " + std::to_string(v));
  }
}

double phi_widest(double x, double alpha) {
  detail::require_alpha(alpha);
  require_finite_arg(x, "phi_widest");
  // Both branches collapse to sign(x) * log1p(|x| + |x|^alpha/alpha), which
  // keeps the function exactly odd in floating point.
  const double ax = std::fabs(x);
  const double mag = std::log1p(ax + detail::pow_abs(x, alpha) / alpha);
  return std::copysign(mag, x);
}

PhiEnvelope phi_envelope(double x, double alpha) {
  detail::require_alpha(alpha);
  require_finite_arg(x, "phi_envelope");
  const double p = detail::pow_abs(x, alpha) / alpha;
  // 1 - x + |x|^alpha/alpha >= 1/alpha > 1/2 for all real x, so the log
  // argument never approaches zero; same for the mirrored branch.
  return PhiEnvelope{-std::log1p(-x + p), std::log1p(x + p)};
}

}  // namespace catoni
