#include "core/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/influence.hpp"
#include "core/io.hpp"
#include "core/mestimator.hpp"

namespace catoni {

EpsilonGrid::EpsilonGrid(double start_in, double step_in, double end_in)
    : start(start_in), step(step_in), end(end_in) {
  if (!(start > 0.0)) throw std::domain_error("grid start must be positive");
  if (!(step > 0.0)) throw std::domain_error("grid step must be positive");
  if (!(end >= start)) throw std::domain_error("grid end must not precede start");
}

EpsilonGrid EpsilonGrid::parse(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    throw ParseError("grid must be written start:step:end, got '" + text + "'");
  }
  const auto to_number = [&text](const std::string& part) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(part, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed grid component '" + part + "' in '" + text + "'");
    }
    if (used != part.size()) {
      throw ParseError("malformed grid component '" + part + "' in '" + text + "'");
    }
    return value;
  };
  return EpsilonGrid(to_number(text.substr(0, first)),
                     to_number(text.substr(first + 1, second - first - 1)),
                     to_number(text.substr(second + 1)));
}

std::size_t EpsilonGrid::size() const {
  return static_cast<std::size_t>(std::floor((end - start) / step + 0.5)) + 1;
}

std::string BoundReport::to_csv() const {
  std::string out = "epsilon,m_estimator_bound,empirical_upper,empirical_lower\n";
  for (const BoundRow& row : rows) {
    out += format_g17(row.epsilon);
    out += ',';
    out += format_g17(row.m_estimator_bound);
    out += ',';
    out += format_g17(row.empirical_upper);
    out += ',';
    out += format_g17(row.empirical_lower);
    out += '\n';
  }
  return out;
}

double empirical_mean_upper(double alpha, double v, std::int64_t n, double epsilon) {
  detail::require_alpha(alpha);
  if (!(v > 0.0)) throw std::domain_error("empirical_mean_upper requires v > 0");
  if (n < 1) throw std::domain_error("empirical_mean_upper requires n >= 1");
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw std::domain_error("empirical_mean_upper requires epsilon in (0, 1/2)");
  }
  return std::pow(v / (epsilon * std::pow(static_cast<double>(n), alpha - 1.0)), 1.0 / alpha);
}

double empirical_mean_lower(double alpha, double v, std::int64_t n, double epsilon) {
  detail::require_alpha(alpha);
  if (!(v > 0.0)) throw std::domain_error("empirical_mean_lower requires v > 0");
  if (!(epsilon > 0.0)) throw std::domain_error("empirical_mean_lower requires epsilon > 0");
  if (!(epsilon < 1.0 / (3.0 * std::numbers::e)) || n < 2) {
    throw ConditionError("en",
                         "empirical_mean_lower requires epsilon < 1/(3e) and n >= 2 (condition "
                         "en); got epsilon = " +
                             std::to_string(epsilon) + ", n = " + std::to_string(n));
  }
  const double dn = static_cast<double>(n);
  const double base = std::pow(v / (3.0 * std::pow(dn, alpha - 1.0) * epsilon), 1.0 / alpha);
  // exp((n-1)/alpha * log1p(-x)) rather than pow(1-x, .): rounding 1-x first
  // costs ~n ulps of relative accuracy once the exponent is large.
  const double shrink =
      std::exp((dn - 1.0) / alpha * std::log1p(-3.0 * std::numbers::e * epsilon / dn));
  return base * shrink;
}

BoundReport figure_curves(double alpha, double v, std::int64_t n, const EpsilonGrid& grid) {
  const AlphaParams params(alpha, v);
  const std::size_t count = grid.size();

  for (std::size_t i = 0; i < count; ++i) {
    const double eps = grid.point(i);
    if (!(eps > 0.0 && eps < 0.5)) {
      throw ConditionError("epsilon_range", "grid point epsilon = " + format_g17(eps) +
                                                " lies outside (0, 1/2)");
    }
    if (!(eps < 1.0 / (3.0 * std::numbers::e)) || n < 2) {
      throw ConditionError("en", "grid point epsilon = " + format_g17(eps) +
                                     " violates condition en (needs epsilon < 1/(3e), n >= 2)");
    }
    const Conditions cond = check_conditions(params, n, eps, tune_beta(params, n, eps));
    if (!cond.assu_ok) {
      throw ConditionError("assu", "grid point epsilon = " + format_g17(eps) +
                                       " violates the sample-size condition (assu) at n = " +
                                       std::to_string(n));
    }
  }

  BoundReport report;
  report.rows.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double eps = grid.point(i);
    report.rows.push_back(BoundRow{eps, deviation_bound(params, n, eps),
                                   empirical_mean_upper(alpha, v, n, eps),
                                   empirical_mean_lower(alpha, v, n, eps)});
  }
  return report;
}

}  // namespace catoni
