#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace beamsym {

/// A mathematical operation left its domain: division by a zero jet, log of a
/// non-positive value, a non-positive profile sample. Carries the abscissa when known.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
  DomainError(const std::string& what, double point)
      : std::domain_error(what + " at x = " + format_point(point)), point_(point) {}

  std::optional<double> point() const { return point_; }

 private:
  static std::string format_point(double x);
  std::optional<double> point_;
};

enum class ParseErrorKind { lexical, unbalanced_parenthesis, unknown_identifier, unexpected_token };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t offset, const std::string& what)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), kind_(kind), offset_(offset) {}

  ParseErrorKind kind() const { return kind_; }
  /// Zero-based character offset into the source; equals the input length for
  /// errors detected at end of input.
  std::size_t offset() const { return offset_; }

 private:
  ParseErrorKind kind_;
  std::size_t offset_;
};

/// Malformed documents, bad parameters, unsupported requests.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative method failed to converge within its budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace beamsym
