#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace baltree {

/// Malformed tree or weight file. `line()` is 1-based, 0 when the problem is
/// not attached to a single line (e.g. missing lines at end of input).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Invalid solver or generator configuration (lambda outside [0,1], unknown
/// method name, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The instance does not satisfy a solver precondition (too few vertices,
/// above an oracle cap, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace baltree
