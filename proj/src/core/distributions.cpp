#include "core/distributions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/influence.hpp"
#include "core/io.hpp"

namespace catoni {

SymmetricParetoLaw::SymmetricParetoLaw(double alpha) : alpha_(alpha) {
  detail::require_alpha(alpha_);
  shape_ = (2.0 + alpha_) / 2.0;
  scale_ = std::pow((2.0 + alpha_) / (2.0 - alpha_), -1.0 / alpha_);
}

double SymmetricParetoLaw::alpha_moment_closed_form() const {
  return shape_ * std::pow(scale_, alpha_) / (shape_ - alpha_);
}

double SymmetricParetoLaw::mean_closed_form() const {
  const double half_tail_mean = 0.5 * shape_ * scale_ / (shape_ - 1.0);
  return half_tail_mean - half_tail_mean;
}

double SymmetricParetoLaw::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) throw std::domain_error("quantile argument must lie in (0, 1)");
  // Each tail carries mass 1/2, so min(u, 1-u) picks the tail coordinate.
  const double w = 2.0 * std::min(u, 1.0 - u);
  const double magnitude = scale_ * std::pow(w, -1.0 / shape_);
  return u < 0.5 ? -magnitude : magnitude;
}

double SymmetricParetoLaw::cdf(double x) const {
  if (x <= -scale_) return 0.5 * std::pow(-x / scale_, -shape_);
  if (x < scale_) return 0.5;
  return 1.0 - 0.5 * std::pow(x / scale_, -shape_);
}

WorstCaseLaw::WorstCaseLaw(double alpha, double v, std::int64_t n, double eta, double gamma)
    : alpha_(alpha), v_(v), n_(n), eta_(eta), gamma_(gamma) {
  detail::require_alpha(alpha_);
  if (!(v_ > 0.0)) throw std::domain_error("worst-case law requires v > 0");
  if (n_ < 2) throw std::domain_error("worst-case law requires n >= 2");
  if (!(eta_ > 0.0)) throw std::domain_error("worst-case law requires eta > 0");
  if (!(gamma_ > alpha_)) {
    throw std::domain_error("worst-case law tail exponent gamma must exceed alpha (got gamma = " +
                            std::to_string(gamma_) + ", alpha = " + std::to_string(alpha_) +
                            "); the alpha-th moment of the tail diverges otherwise");
  }
  if (!(gamma_ < 2.0)) throw std::domain_error("worst-case law requires gamma < 2");

  atom_point_ = static_cast<double>(n_) * eta_;
  const double budget = v_ / std::pow(atom_point_, alpha_);
  if (budget > 1.0) {
    throw std::domain_error("worst-case law needs v / (n*eta)^alpha <= 1, got " +
                            std::to_string(budget));
  }
  mass_zero_ = 1.0 - budget;
  mass_atom_ = budget / 3.0;
  mass_tail_ = budget / 6.0;
  const double ratio = (gamma_ - alpha_) / gamma_;
  p_ = std::pow(ratio, 1.0 / alpha_) * atom_point_;
  q_ = gamma_ * v_ / 3.0 * std::pow(ratio, gamma_ / alpha_) *
       std::pow(atom_point_, gamma_ - alpha_);
}

double WorstCaseLaw::tail_mass_above(double x) const {
  return q_ / (2.0 * gamma_) * std::pow(x, -gamma_);
}

double WorstCaseLaw::mass_budget() const {
  return mass_zero_ + 2.0 * mass_atom_ + 2.0 * tail_mass_above(p_);
}

double WorstCaseLaw::tail_alpha_moment() const {
  if (!(gamma_ > alpha_)) {
    throw std::domain_error("tail alpha-moment diverges unless gamma > alpha");
  }
  return q_ * std::pow(p_, alpha_ - gamma_) / (gamma_ - alpha_);
}

double WorstCaseLaw::alpha_moment_closed_form() const {
  const double atoms = 2.0 * mass_atom_ * std::pow(atom_point_, alpha_);
  return atoms + tail_alpha_moment();
}

double WorstCaseLaw::mean_closed_form() const {
  // Atoms at +-n*eta carry equal mass; each tail mean is finite (gamma > 1).
  const double atom_part = mass_atom_ * atom_point_ - mass_atom_ * atom_point_;
  const double tail_mean = 0.5 * q_ * std::pow(p_, 1.0 - gamma_) / (gamma_ - 1.0);
  return atom_part + (tail_mean - tail_mean);
}

double WorstCaseLaw::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) throw std::domain_error("quantile argument must lie in (0, 1)");
  const double atom_tail = tail_mass_above(atom_point_);  // continuous mass beyond +-n*eta

  if (u < mass_tail_ + mass_atom_) {
    // Left tail and the -n*eta atom, ordered by increasing x.
    if (u < atom_tail) return -std::pow(q_ / (2.0 * gamma_ * u), 1.0 / gamma_);
    if (u < atom_tail + mass_atom_) return -atom_point_;
    return -std::pow(q_ / (2.0 * gamma_ * (u - mass_atom_)), 1.0 / gamma_);
  }
  if (u < mass_tail_ + mass_atom_ + mass_zero_) return 0.0;

  const double w = 1.0 - u;  // mirrored coordinate for the right side
  if (w < atom_tail) return std::pow(q_ / (2.0 * gamma_ * w), 1.0 / gamma_);
  if (w < atom_tail + mass_atom_) return atom_point_;
  return std::pow(q_ / (2.0 * gamma_ * (w - mass_atom_)), 1.0 / gamma_);
}

double WorstCaseLaw::cdf(double x) const {
  if (x < -atom_point_) return tail_mass_above(-x);
  if (x < -p_) return tail_mass_above(-x) + mass_atom_;
  if (x < 0.0) return mass_tail_ + mass_atom_;
  if (x < p_) return mass_tail_ + mass_atom_ + mass_zero_;
  if (x < atom_point_) return 1.0 - mass_atom_ - tail_mass_above(x);
  return 1.0 - tail_mass_above(x);
}

double WorstCaseLaw::cdf_left(double x) const {
  double atom = 0.0;
  if (x == 0.0) {
    atom = mass_zero_;
  } else if (x == atom_point_) {
    atom = mass_atom_;
  } else if (x == -atom_point_) {
    atom = mass_atom_;
  }
  return cdf(x) - atom;
}

MomentCheck verify_moments(const SymmetricParetoLaw& law) {
  return MomentCheck{law.mean_closed_form() - law.mean(),
                     law.alpha_moment_closed_form() - law.v()};
}

MomentCheck verify_moments(const WorstCaseLaw& law) {
  return MomentCheck{law.mean_closed_form() - law.mean(),
                     law.alpha_moment_closed_form() - law.v()};
}

namespace {

const nlohmann::json& require_field(const nlohmann::json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) {
    throw ParseError(std::string("law JSON is missing required field \"") + name + "\"");
  }
  return *it;
}

double number_field(const nlohmann::json& doc, const char* name) {
  const nlohmann::json& field = require_field(doc, name);
  if (!field.is_number()) {
    throw ParseError(std::string("law JSON field \"") + name + "\" must be a number");
  }
  return field.get<double>();
}

}  // namespace

Law law_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid law JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("law JSON must be an object");

  const nlohmann::json& kind_field = require_field(doc, "kind");
  if (!kind_field.is_string()) throw ParseError("law JSON field \"kind\" must be a string");
  const std::string kind = kind_field.get<std::string>();

  if (kind == "symmetric_pareto") {
    return SymmetricParetoLaw(number_field(doc, "alpha"));
  }
  if (kind == "worst_case") {
    const double alpha = number_field(doc, "alpha");
    const double v = number_field(doc, "v");
    const double n = number_field(doc, "n");
    if (n != std::floor(n)) throw ParseError("law JSON field \"n\" must be an integer");
    const double eta = number_field(doc, "eta");
    const double gamma =
        doc.contains("gamma") ? number_field(doc, "gamma") : (alpha + 2.0) / 2.0;
    return WorstCaseLaw(alpha, v, static_cast<std::int64_t>(n), eta, gamma);
  }
  throw ParseError("unknown law kind \"" + kind +
                   "\"; expected \"symmetric_pareto\" or \"worst_case\"");
}

std::string law_to_json(const Law& law) {
  if (const auto* pareto = std::get_if<SymmetricParetoLaw>(&law)) {
    return std::string("{\"kind\":\"symmetric_pareto\",\"alpha\":") +
           format_g17(pareto->alpha()) + "}";
  }
  const auto& worst = std::get<WorstCaseLaw>(law);
  return std::string("{\"kind\":\"worst_case\",\"alpha\":") + format_g17(worst.alpha()) +
         ",\"v\":" + format_g17(worst.v()) + ",\"n\":" + std::to_string(worst.n()) +
         ",\"eta\":" + format_g17(worst.eta()) + ",\"gamma\":" + format_g17(worst.gamma()) + "}";
}

double law_alpha(const Law& law) {
  return std::visit([](const auto& l) { return l.alpha(); }, law);
}

double law_v(const Law& law) {
  return std::visit([](const auto& l) { return l.v(); }, law);
}

double law_mean(const Law& law) {
  return std::visit([](const auto& l) { return l.mean(); }, law);
}

double law_sample(const Law& law, SplitMix64& rng) {
  return std::visit([&rng](const auto& l) { return l.sample(rng); }, law);
}

double law_cdf(const Law& law, double x) {
  return std::visit([x](const auto& l) { return l.cdf(x); }, law);
}

}  // namespace catoni
