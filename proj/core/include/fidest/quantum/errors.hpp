#pragma once

#include <stdexcept>
#include <string>

namespace fidest {

// Invalid argument values: non-normalized states, out-of-range angles,
// malformed configurations.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Raised when an exact computation would exceed its documented cost cap
// (permanent size, closed-form binomial sum). Callers switch to a fallback.
class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fidest
