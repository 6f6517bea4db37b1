#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Evaluation at a point where the requested quantity is undefined
// (singular torus element, pole of a zeta function, singular weight).
class SingularError : public Error {
 public:
  using Error::Error;
};

// A bounded enumeration did not stabilize under bound doubling.
class StabilizationError : public Error {
 public:
  using Error::Error;
};

}  // namespace hecke
