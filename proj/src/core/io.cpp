#include "core/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace catoni {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string strip(const std::string& s) {
  const char* ws = " \t\r\n";
  const auto begin = s.find_first_not_of(ws);
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(ws);
  return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& token, long line) {
  const std::string t = strip(token);
  if (t.empty()) throw ParseError("empty numeric field on line " + std::to_string(line), line);
  char* end = nullptr;
  const double value = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) {
    throw ParseError("malformed number '" + t + "' on line " + std::to_string(line), line);
  }
  return value;
}

}  // namespace

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::vector<double> parse_sample_csv(const std::string& text, bool header) {
  std::vector<double> values;
  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  bool pending_header = header;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = strip(line);
    if (t.empty()) continue;
    if (pending_header) {
      pending_header = false;
      continue;
    }
    values.push_back(parse_number(t, line_no));
  }
  if (values.empty()) throw ParseError("no sample values found");
  return values;
}

std::vector<double> read_sample_csv(const std::string& path, bool header) {
  return parse_sample_csv(read_file(path), header);
}

ProblemData parse_problem_csv(const std::string& text, bool header) {
  ProblemData data;
  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  bool pending_header = header;
  std::int64_t columns = -1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = strip(line);
    if (t.empty()) continue;
    if (pending_header) {
      pending_header = false;
      continue;
    }
    std::vector<double> fields;
    std::istringstream row(t);
    std::string token;
    while (std::getline(row, token, ',')) fields.push_back(parse_number(token, line_no));
    if (columns < 0) {
      columns = static_cast<std::int64_t>(fields.size());
      if (columns < 2) {
        throw ParseError("line " + std::to_string(line_no) +
                             ": need at least one covariate column and a response column",
                         line_no);
      }
      data.d = columns - 1;
    } else if (static_cast<std::int64_t>(fields.size()) != columns) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                           std::to_string(columns) + " fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    data.xs.insert(data.xs.end(), fields.begin(), fields.end() - 1);
    data.ys.push_back(fields.back());
    ++data.n;
  }
  if (data.n == 0) throw ParseError("no data rows found");
  return data;
}

ProblemData read_problem_csv(const std::string& path, bool header) {
  return parse_problem_csv(read_file(path), header);
}

}  // namespace catoni
