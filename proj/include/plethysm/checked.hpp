#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace plethysm {

/// Exact coefficient type used throughout. Arithmetic on it goes through the
/// checked helpers below; overflow is reported as a ComputationError.
using Coeff = std::int64_t;

/// Raised for bad arguments: malformed partitions, degree mismatches,
/// violated preconditions.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation cannot complete exactly (overflow, or input that
/// is not the character of a representation).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw ComputationError("integer overflow in addition");
  return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw ComputationError("integer overflow in subtraction");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw ComputationError("integer overflow in multiplication");
  return r;
}

inline void require(bool condition, const std::string& message) {
  if (!condition) throw UsageError(message);
}

}  // namespace plethysm
