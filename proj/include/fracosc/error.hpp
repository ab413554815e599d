#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracosc {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (gamma pole,
/// division by zero, non-positive error passed to an order estimate, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A series or iteration hit its term cap before meeting its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A computed value became NaN or infinite.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// Invalid problem, grid, or configuration values.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class GridMismatchError : public Error {
 public:
  using Error::Error;
};

/// The order pair cannot be reduced to a system with both orders in (0, 1].
class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

/// Step exceeds the explicit scheme's stability threshold.
class StabilityError : public Error {
 public:
  StabilityError(double step, double threshold);

  [[nodiscard]] double step() const noexcept { return step_; }
  [[nodiscard]] double threshold() const noexcept { return threshold_; }

 private:
  double step_;
  double threshold_;
};

/// Expression syntax error; offset is a byte index into the source text.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message);

  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace fracosc
