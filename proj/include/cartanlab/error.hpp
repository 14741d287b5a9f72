#pragma once

#include <stdexcept>
#include <string>

namespace cartanlab {

/// Base for every error raised by the library. The CLI maps the concrete
/// subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: files, cycle strings, matrices of the wrong shape.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a mathematical precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured element, point or table cap was exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagree, or a value
/// that must be integral is not. Always indicates a bug or corrupted data.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace cartanlab
