#pragma once

#include <stdexcept>
#include <string>

namespace polariton {

/// Malformed model file or unreadable input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented invariant. The message names the offending field.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested basis or group enumeration exceeds the configured size limits.
class ComputeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polariton
