#pragma once

#include <stdexcept>
#include <string>

namespace semimod {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed table or element index outside the carrier.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Invalid construction parameters for a built-in instance.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A flag or property that needs a zero, a one, or a codomain feature the
/// input does not have.
class InapplicableError : public Error {
 public:
  using Error::Error;
};

/// An operand outside the domain of a partial operation, e.g. a
/// non-complemented argument to the symmetric difference.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two distinct complements were found for one element.
class CorruptionError : public Error {
 public:
  using Error::Error;
};

/// A theorem's hypothesis does not hold for the supplied input.
class HypothesisError : public Error {
 public:
  HypothesisError(std::string hypothesis, const std::string& detail)
      : Error("hypothesis '" + hypothesis + "' fails: " + detail),
        hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// Conditioning on an event whose probability is not invertible.
class ConditioningError : public HypothesisError {
 public:
  explicit ConditioningError(const std::string& detail)
      : HypothesisError("invertible", detail) {}
};

/// Exhaustive work would exceed the configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Integer input or intermediate result above the configured bound.
class BoundError : public Error {
 public:
  using Error::Error;
};

/// Text input that cannot be parsed. Line and column are 1-based; zero means
/// unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(format(line, column, message)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::size_t line, std::size_t column,
                            const std::string& message) {
    if (line == 0) return message;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace semimod
