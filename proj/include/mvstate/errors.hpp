#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvstate {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed literal, wrong arity, out-of-range parameter.
/// The CLI maps these to exit code 2.
class InputError : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public InputError {
public:
  using InputError::InputError;
};

class CapExceeded : public InputError {
public:
  using InputError::InputError;
};

class PartialTable : public InputError {
public:
  using InputError::InputError;
};

class ParseError : public InputError {
public:
  ParseError(std::string message, std::size_t line, std::size_t column,
             std::vector<std::string> expected = {})
      : InputError(format(message, line, column, expected)),
        line_(line), column_(column), expected_(std::move(expected)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column,
                            const std::vector<std::string>& expected) {
    std::string out = std::to_string(line) + ":" + std::to_string(column) +
                      ": " + message;
    if (!expected.empty()) {
      out += " (expected one of:";
      for (const auto& e : expected) out += " " + e;
      out += ")";
    }
    return out;
  }

  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// A mathematical property the caller asserted does not hold.
/// The CLI maps these to exit code 1.
class PropertyViolation : public Error {
public:
  using Error::Error;
};

class NotAHomomorphism : public PropertyViolation {
public:
  using PropertyViolation::PropertyViolation;
};

class NotInjective : public PropertyViolation {
public:
  using PropertyViolation::PropertyViolation;
};

class NotAState : public PropertyViolation {
public:
  using PropertyViolation::PropertyViolation;
};

class PositivityViolation : public PropertyViolation {
public:
  using PropertyViolation::PropertyViolation;
};

class UnitViolation : public PropertyViolation {
public:
  using PropertyViolation::PropertyViolation;
};

class OutsideDomain : public PropertyViolation {
public:
  using PropertyViolation::PropertyViolation;
};

class DegenerateSimplex : public InputError {
public:
  using InputError::InputError;
};

}  // namespace mvstate
