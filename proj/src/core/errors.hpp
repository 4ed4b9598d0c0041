#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace catoni {

// Thrown when a hypothesis of one of the probability guarantees fails.
// `condition()` carries the short name of the violated inequality
// ("assu", "exisineq", "exisineq2", "en") so callers can report it.
class ConditionError : public std::runtime_error {
 public:
  ConditionError(std::string condition, const std::string& what)
      : std::runtime_error(what), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

// Malformed CSV/JSON input. `line()` is 1-based when known, -1 otherwise.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, long line = -1)
      : std::runtime_error(what), line_(line) {}

  long line() const noexcept { return line_; }

 private:
  long line_;
};

}  // namespace catoni
