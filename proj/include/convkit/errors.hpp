#pragma once

#include <stdexcept>
#include <string>

namespace convkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// An enumeration or minor count would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed literal or file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace convkit
