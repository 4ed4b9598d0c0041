#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "core/rng.hpp"

namespace catoni {

// Two-sided Pareto law with mean 0 and unit alpha-th absolute moment.
// Each tail carries mass 1/2:
//   P(X >= x) = (1/2) (x / scale)^(-shape),  x >= scale,
// mirrored on the left, with shape = (2+alpha)/2 and
// scale = ((2+alpha)/(2-alpha))^(-1/alpha). The support excludes
// (-scale, scale).
class SymmetricParetoLaw {
 public:
  explicit SymmetricParetoLaw(double alpha);

  double alpha() const noexcept { return alpha_; }
  double shape() const noexcept { return shape_; }
  double scale() const noexcept { return scale_; }
  double mean() const noexcept { return 0.0; }
  double v() const noexcept { return 1.0; }

  // shape * scale^alpha / (shape - alpha); equals 1 up to rounding.
  double alpha_moment_closed_form() const;
  // Signed tail means, summed; cancels to 0 up to rounding.
  double mean_closed_form() const;

  double quantile(double u) const;  // generalized inverse CDF on (0, 1)
  double cdf(double x) const;
  double sample(SplitMix64& rng) const { return quantile(rng.uniform01()); }

 private:
  double alpha_;
  double shape_;
  double scale_;
};

// Mixed law attaining the empirical-mean deviation lower bound: atoms at 0
// and +-(n*eta), plus symmetric Pareto tails of exponent gamma beyond +-p.
// With A = v / (n*eta)^alpha the masses are
//   P(X = 0) = 1 - A,   P(X = +-n*eta) = A/3,   each tail carries A/6,
// and E X = 0, E|X|^alpha = v. Construction requires A <= 1 and
// gamma in (alpha, 2); any further constraint on eta is left to the caller.
class WorstCaseLaw {
 public:
  WorstCaseLaw(double alpha, double v, std::int64_t n, double eta, double gamma);

  double alpha() const noexcept { return alpha_; }
  double v() const noexcept { return v_; }
  std::int64_t n() const noexcept { return n_; }
  double eta() const noexcept { return eta_; }
  double gamma() const noexcept { return gamma_; }
  double mean() const noexcept { return 0.0; }

  double atom_point() const noexcept { return atom_point_; }  // n * eta
  double tail_start() const noexcept { return p_; }           // p < n * eta
  double tail_coefficient() const noexcept { return q_; }     // q

  double mass_zero() const noexcept { return mass_zero_; }
  double mass_atom() const noexcept { return mass_atom_; }  // each of +-n*eta
  double mass_tail() const noexcept { return mass_tail_; }  // each tail
  // Total probability recomposed from (p, q, gamma) and the atoms; the tail
  // pieces are evaluated through the tail formula rather than reusing
  // mass_tail, so cancellation to 1 is a real check.
  double mass_budget() const;

  // q p^(alpha-gamma) / (gamma - alpha): alpha-moment of both tails; = v/3.
  double tail_alpha_moment() const;
  double alpha_moment_closed_form() const;  // = v up to rounding
  double mean_closed_form() const;          // = 0 up to rounding

  double quantile(double u) const;  // generalized inverse CDF on (0, 1)
  double cdf(double x) const;
  double cdf_left(double x) const;  // left limit of the CDF at x
  double sample(SplitMix64& rng) const { return quantile(rng.uniform01()); }

 private:
  double tail_mass_above(double x) const;  // (q / (2 gamma)) x^(-gamma)

  double alpha_;
  double v_;
  std::int64_t n_;
  double eta_;
  double gamma_;
  double atom_point_;
  double p_;
  double q_;
  double mass_zero_;
  double mass_atom_;
  double mass_tail_;
};

struct MomentCheck {
  double mean_err;
  double alpha_moment_err;
};

// Semi-analytic moment verification: atoms exactly, tails in closed form.
MomentCheck verify_moments(const SymmetricParetoLaw& law);
MomentCheck verify_moments(const WorstCaseLaw& law);

using Law = std::variant<SymmetricParetoLaw, WorstCaseLaw>;

// {"kind": "symmetric_pareto", "alpha": ...} or
// {"kind": "worst_case", "alpha": ..., "v": ..., "n": ..., "eta": ...,
//  "gamma": ...}. gamma defaults to (alpha + 2) / 2 when absent.
Law law_from_json(const std::string& text);
std::string law_to_json(const Law& law);

double law_alpha(const Law& law);
double law_v(const Law& law);
double law_mean(const Law& law);
double law_sample(const Law& law, SplitMix64& rng);
double law_cdf(const Law& law, double x);

}  // namespace catoni
