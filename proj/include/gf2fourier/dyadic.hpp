#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

namespace gf2f {

using BigInt = boost::multiprecision::cpp_int;

// Exact dyadic rational m / 2^k with arbitrary-precision m. Normal form:
// m odd, or the canonical zero (0, 0). k may be negative, so plain integers
// are representable too (5 is 5/2^0, 12 is 3/2^-2). Equality on the normal
// form is value equality, and the granularity of a nonzero value is just k.
class Dyadic {
 public:
  Dyadic() = default;  // zero
  Dyadic(BigInt numerator, std::int64_t exponent);
  static Dyadic from_int(long long v) { return Dyadic(BigInt(v), 0); }

  bool is_zero() const { return num_.is_zero(); }
  const BigInt& numerator() const { return num_; }
  std::int64_t exponent() const { return exp_; }

  // k of the normal form m/2^k; disengaged for zero (zero divides everything).
  std::optional<std::int64_t> granularity() const;

  // "m/2^k" with the power evaluated ("-3/16"); integers print bare ("1",
  // "-4"); zero prints "0".
  std::string to_string() const;

  Dyadic operator-() const;
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) = default;

 private:
  BigInt num_ = 0;
  std::int64_t exp_ = 0;
};

inline std::optional<std::int64_t> granularity_of(const Dyadic& a) {
  return a.granularity();
}

}  // namespace gf2f
