#pragma once

#include <stdexcept>
#include <string>

namespace trigeom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different fields") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// Arity, dimension or index errors.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The (field, parameter) pair violates a catalog condition.
class ConditionViolation : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would exceed the configured point budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace trigeom
