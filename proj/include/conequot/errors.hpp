#pragma once

#include <stdexcept>
#include <string>

namespace conequot {

/// Malformed or inconsistent user data. CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap was exceeded. CLI exit code 3.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. CLI exit code 4.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A point outside the weight cone was passed where one inside is required.
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace conequot
