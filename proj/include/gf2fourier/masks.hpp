#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gf2f {

// A set of variables, encoded as a bitmask: bit i (0-based) is variable
// x_{i+1} of the 1-based surface syntax. Monomials and Fourier characters
// are both just masks.
using Mask = std::uint32_t;

// Hard cap for every operation that enumerates all 2^n points or subsets.
inline constexpr int kMaxVars = 24;

// Thrown when an input is structurally fine but too large to compute with
// (as opposed to a std::domain_error for contract violations).
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int popcount(Mask m) noexcept { return std::popcount(m); }

constexpr Mask full_mask(int n) noexcept {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

// Index of the lowest set bit; undefined for 0.
constexpr int lowest_bit(Mask m) noexcept { return std::countr_zero(m); }

inline void check_var_count(int n_vars, int cap = kMaxVars) {
  if (n_vars < 0) throw std::domain_error("variable count must be nonnegative");
  if (n_vars > cap)
    throw ResourceLimitError("variable count " + std::to_string(n_vars) +
                             " exceeds the supported cap of " + std::to_string(cap));
}

}  // namespace gf2f
