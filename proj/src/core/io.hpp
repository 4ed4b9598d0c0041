#pragma once

#include <string>
#include <vector>

namespace catoni {

// Shortest text form carrying 17 significant digits; round-trips any double.
std::string format_g17(double x);

// One value per line; `header` skips the first non-blank line. Blank lines
// are ignored. Malformed lines raise ParseError with their 1-based number.
std::vector<double> read_sample_csv(const std::string& path, bool header);
std::vector<double> parse_sample_csv(const std::string& text, bool header);

// Rows of "x_1,...,x_d,y"; the column count is fixed by the first data row.
struct ProblemData {
  std::vector<double> xs;  // row-major, n x d
  std::vector<double> ys;
  std::int64_t n = 0;
  std::int64_t d = 0;
};
ProblemData read_problem_csv(const std::string& path, bool header);
ProblemData parse_problem_csv(const std::string& text, bool header);

}  // namespace catoni
