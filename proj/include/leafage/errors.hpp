#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leafage {

/// Malformed edge-list or clause-file input. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An operation was called with arguments that violate its precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A result the algorithms guarantee did not hold at runtime.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The brute-force enumeration would exceed its configured cap.
class OracleLimitExceeded : public std::runtime_error {
 public:
  explicit OracleLimitExceeded(std::size_t limit)
      : std::runtime_error("clique-tree enumeration exceeded the limit of " +
                           std::to_string(limit) + " trees"),
        limit_(limit) {}

  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

}  // namespace leafage
