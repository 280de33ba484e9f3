#include "gf2fourier/sampling.hpp"

#include <stdexcept>

#include "gf2fourier/rng.hpp"

namespace gf2f {

namespace {

// Distinct counter ranges per purpose so draws never collide.
constexpr std::uint64_t kTagMask = 1ULL << 56;
constexpr std::uint64_t kTagRow = 2ULL << 56;
constexpr std::uint64_t kTagBit = 3ULL << 56;

}  // namespace

Gf2Poly random_poly(int n, std::uint64_t seed) {
  check_var_count(n);
  std::vector<Mask> monomials;
  std::size_t limit = std::size_t{1} << n;
  for (std::size_t m = 0; m < limit; ++m)
    if (prf64(seed, kTagMask | m) >> 63) monomials.push_back(static_cast<Mask>(m));
  return Gf2Poly(n, std::move(monomials));
}

Gf2Poly random_poly_exact_degree(int d, int n, std::uint64_t seed) {
  check_var_count(n);
  if (d < 1 || d > n) throw std::domain_error("need 1 <= d <= n");
  std::vector<Mask> monomials;
  bool have_top = false;
  std::size_t limit = std::size_t{1} << n;
  for (std::size_t m = 0; m < limit; ++m) {
    if (popcount(static_cast<Mask>(m)) > d) continue;
    if (prf64(seed, kTagMask | m) >> 63) {
      monomials.push_back(static_cast<Mask>(m));
      have_top |= popcount(static_cast<Mask>(m)) == d;
    }
  }
  if (!have_top) monomials.push_back(full_mask(d));
  return Gf2Poly(n, std::move(monomials));
}

Mask random_nonzero_mask(int n, std::uint64_t seed) {
  check_var_count(n);
  if (n == 0) throw std::domain_error("no nonzero mask on 0 variables");
  for (std::uint64_t c = 0;; ++c) {
    Mask m = static_cast<Mask>(prf64(seed, kTagMask | c)) & full_mask(n);
    if (m != 0) return m;
  }
}

LinearMap random_invertible_map(int n, std::uint64_t seed) {
  check_var_count(n);
  std::uint64_t c = 0;
  for (;;) {
    std::vector<Mask> rows(n);
    for (int i = 0; i < n; ++i)
      rows[i] = static_cast<Mask>(prf64(seed, kTagRow | c++)) & full_mask(n);
    try {
      return LinearMap(n, std::move(rows));
    } catch (const std::domain_error&) {
      // singular draw; take the next batch of rows
    }
  }
}

LinearSystem random_system(int n, int r, std::uint64_t seed) {
  check_var_count(n);
  if (r < 0 || r > n) throw std::domain_error("need 0 <= r <= n_vars");
  std::uint64_t c = 0;
  for (;;) {
    std::vector<Mask> forms(r);
    std::vector<int> bits(r);
    for (int i = 0; i < r; ++i) {
      forms[i] = static_cast<Mask>(prf64(seed, kTagRow | c++)) & full_mask(n);
      bits[i] = prf64(seed, kTagBit | c) >> 63;
    }
    try {
      return LinearSystem(n, std::move(forms), std::move(bits));
    } catch (const std::domain_error&) {
      // dependent draw; retry with fresh forms
    }
  }
}

}  // namespace gf2f
