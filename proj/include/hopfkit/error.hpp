#pragma once

#include <stdexcept>
#include <string>

namespace hopfkit {

/// Base class for every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes or ambient dimensions do not agree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called on inputs violating its precondition. The message
/// carries the witness (offending indices or element).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The requested decision procedure is not available over this field.
class UnsupportedField : public Error {
 public:
  using Error::Error;
};

/// Malformed input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A post-condition that must hold for valid inputs failed. Indicates a bug or
/// inputs that bypassed validation.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hopfkit
