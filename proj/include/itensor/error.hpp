#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace itensor {

/// Malformed input: wrong shape, out-of-range index, non-finite value,
/// violated precondition. Messages use 1-based positions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vertex enumeration would exceed the caller's budget. The required count
/// is 2^exponent.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t exponent, std::uint64_t limit)
      : std::runtime_error("vertex enumeration needs 2^" + std::to_string(exponent) +
                           " tensors, budget is " + std::to_string(limit)),
        exponent_(exponent),
        limit_(limit) {}

  std::uint64_t required_exponent() const noexcept { return exponent_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t exponent_;
  std::uint64_t limit_;
};

}  // namespace itensor
