#pragma once

#include <stdexcept>
#include <string>

namespace szego {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation at a pole (Gamma at a nonpositive integer, 1/(1-Az) at z = 1/A, ...).
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A value left the representable exponent range, or a NaN/Inf was produced.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An iterative method did not reach its tolerance within its budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Odd degree where an even one is required (Bessel sections).
class ParityError : public Error {
 public:
  using Error::Error;
};

}  // namespace szego
