#pragma once

#include <stdexcept>
#include <string>

namespace tropsd {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The caller passed data that violates an operation's precondition
// (dimension mismatch, malformed rational, non-member matrix, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// The instance is larger than an exhaustive routine is willing to enumerate.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// The valuation of the zero Puiseux polynomial was requested.
class UndefinedValuation : public Error {
 public:
  using Error::Error;
};

}  // namespace tropsd
