#include "gf2fourier/dyadic.hpp"

#include <utility>

namespace gf2f {

namespace {

BigInt pow2(std::int64_t k) {
  BigInt r = 1;
  return r << static_cast<unsigned>(k);
}

}  // namespace

Dyadic::Dyadic(BigInt numerator, std::int64_t exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  // Strip factors of two from the numerator. lsb() wants a positive value;
  // division (exact here) sidesteps sign questions around shifting negatives.
  BigInt a = abs(num_);
  std::size_t tz = lsb(a);
  if (tz > 0) {
    num_ /= pow2(static_cast<std::int64_t>(tz));
    exp_ -= static_cast<std::int64_t>(tz);
  }
}

std::optional<std::int64_t> Dyadic::granularity() const {
  if (is_zero()) return std::nullopt;
  return exp_;
}

std::string Dyadic::to_string() const {
  if (is_zero()) return "0";
  if (exp_ > 0) return num_.str() + "/" + pow2(exp_).str();
  if (exp_ == 0) return num_.str();
  return BigInt(num_ * pow2(-exp_)).str();
}

Dyadic Dyadic::operator-() const {
  Dyadic r;
  r.num_ = -num_;
  r.exp_ = exp_;
  return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::int64_t k = std::max(a.exp_, b.exp_);
  BigInt m = a.num_ * pow2(k - a.exp_) + b.num_ * pow2(k - b.exp_);
  return Dyadic(std::move(m), k);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero() || b.is_zero()) return Dyadic();
  // odd * odd is odd, so the product is already in normal form; the
  // constructor's normalization pass is a no-op.
  return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
}

}  // namespace gf2f
