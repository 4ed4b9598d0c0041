#pragma once

namespace catoni {

// Moment parameters shared by every estimator formula: the exponent alpha
// of the heaviest finite absolute central moment, and that moment's value v.
// alpha must lie strictly inside (1, 2); both endpoints are rejected.
struct AlphaParams {
  double alpha;
  double v;

  AlphaParams(double alpha, double v);
};

struct PhiEnvelope {
  double lower;
  double upper;
};

// Widest influence function compatible with the defining envelope:
//
//   phi(x) =  log(1 + x + x^alpha / alpha)      for x >= 0
//   phi(x) = -log(1 - x + |x|^alpha / alpha)    for x < 0
//
// Odd, strictly increasing, and equal to the envelope's upper curve on
// x >= 0 and to its lower curve on x < 0.
double phi_widest(double x, double alpha);

// The pair (-log(1 - x + |x|^alpha/alpha), log(1 + x + |x|^alpha/alpha)).
// Any admissible influence function must lie between the two.
PhiEnvelope phi_envelope(double x, double alpha);

namespace detail {

// Throws std::domain_error unless 1 < alpha < 2.
void require_alpha(double alpha);

// |x|^alpha as exp(alpha * log|x|), with the x = 0 case handled before the
// log. alpha is never an integer here, so no pow-by-squaring shortcut exists.
double pow_abs(double x, double alpha);

}  // namespace detail

}  // namespace catoni
