#pragma once

#include <stdexcept>
#include <string>

namespace ricepath {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (e.g. Re s <= -1 for a lifting).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested at (or numerically on top of) a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative or adaptive procedure did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A truncation would need more terms than the configured cap allows.
class ToleranceUnreachable : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

/// Index or size outside the supported range of an operation.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (sequence specs, rationals, ranges).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ricepath
