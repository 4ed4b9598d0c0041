#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace catoni {

// Inclusive arithmetic grid written "start:step:end". The last point is the
// largest start + k*step <= end + step/2, which keeps the count stable under
// decimal rounding of the endpoints.
struct EpsilonGrid {
  double start;
  double step;
  double end;

  EpsilonGrid(double start, double step, double end);
  static EpsilonGrid parse(const std::string& text);

  std::size_t size() const;
  double point(std::size_t index) const { return start + static_cast<double>(index) * step; }
};

struct BoundRow {
  double epsilon;
  double m_estimator_bound;
  double empirical_upper;
  double empirical_lower;
};

struct BoundReport {
  std::vector<BoundRow> rows;

  // "epsilon,m_estimator_bound,empirical_upper,empirical_lower" header plus
  // one row per grid point, 17 significant digits, byte-stable.
  std::string to_csv() const;
};

// (v / (eps n^(alpha-1)))^(1/alpha); the empirical mean deviates by at least
// this with probability at most 2 eps.
double empirical_mean_upper(double alpha, double v, std::int64_t n, double epsilon);

// eta* = (v / (3 n^(alpha-1) eps))^(1/alpha) (1 - 3 e eps / n)^((n-1)/alpha);
// for the worst-case law built with this eta the empirical mean deviates by
// at least eta* with probability at least 2 eps. Requires eps < 1/(3e) and
// n >= 2 (condition "en").
double empirical_mean_lower(double alpha, double v, std::int64_t n, double epsilon);

// Evaluates the three bounds over the grid, rows in ascending epsilon.
// Every grid point must satisfy the hypotheses of all three formulas; the
// first offending point is named in the error.
BoundReport figure_curves(double alpha, double v, std::int64_t n, const EpsilonGrid& grid);

}  // namespace catoni
