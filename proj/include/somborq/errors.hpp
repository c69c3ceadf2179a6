#ifndef SOMBORQ_ERRORS_HPP
#define SOMBORQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace somborq {

/// Requested operation is only implemented up to a size cap (e.g. canonical
/// forms for n <= 16, enumeration for n <= 10).
class unsupported_size_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Text input (edge-list files) failed to parse. Carries the 1-based line
/// number of the offending line; 0 when the problem is not tied to a line.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

/// A graph move (double swap / rotation) whose preconditions do not hold.
class move_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace somborq

#endif
