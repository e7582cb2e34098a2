#pragma once

#include <stdexcept>
#include <string>

namespace graphprod {

/// Malformed or inconsistent input: unknown vertices, payload/group mismatch,
/// preconditions the caller was responsible for.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or search exceeded its configured cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A diagram (or another derived structure) is internally inconsistent.
class InvalidDiagram : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace graphprod
