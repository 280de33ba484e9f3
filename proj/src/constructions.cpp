#include "gf2fourier/constructions.hpp"

#include <stdexcept>

#include "gf2fourier/rng.hpp"

namespace gf2f {

namespace {

bool is_odd_prime(int d) {
  if (d < 3 || d % 2 == 0) return false;
  for (int q = 3; q * q <= d; q += 2)
    if (d % q == 0) return false;
  return true;
}

}  // namespace

Gf2Poly complete_uniform(int d, int n) {
  check_var_count(n);
  if (d < 0 || d > n) throw std::domain_error("need 0 <= d <= n");
  std::vector<Mask> monomials;
  if (d == 0) {
    monomials.push_back(0);
  } else {
    // Gosper's hack walks the d-subsets of [n] in increasing mask order.
    Mask m = full_mask(d);
    Mask limit = Mask{1} << n;
    while (m < limit) {
      monomials.push_back(m);
      Mask c = m & -m;
      Mask r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  return Gf2Poly(n, std::move(monomials));
}

LinearSystem complete_uniform_restrictions(int d, int n) {
  check_var_count(n);
  if (d < 2 || d % 2 != 0 || d > n)
    throw std::domain_error("need even d with 2 <= d <= n");
  std::vector<Mask> forms;
  if (n % 2 == 0) {
    forms.push_back(Mask{1} << (d - 1));
    for (int j = d; j + 1 < n; j += 2)
      forms.push_back((Mask{1} << j) | (Mask{1} << (j + 1)));
  } else {
    for (int j = d - 1; j + 1 < n; j += 2)
      forms.push_back((Mask{1} << j) | (Mask{1} << (j + 1)));
  }
  return LinearSystem(n, forms, std::vector<int>(forms.size(), 0));
}

Gf2Poly disjoint_blocks(int d, int n) {
  check_var_count(n);
  if (d < 1 || n % d != 0) throw std::domain_error("need d >= 1 dividing n");
  std::vector<Mask> monomials;
  for (int j = 0; j < n; j += d) monomials.push_back(full_mask(d) << j);
  return Gf2Poly(n, std::move(monomials));
}

std::vector<Mask> grid_supports(int d, int n) {
  if (!is_odd_prime(d)) throw std::domain_error("grid needs an odd prime d");
  if (n < 1 || n % (d * d) != 0 || n > 32)
    throw std::domain_error("grid needs d^2 dividing n, n <= 32");
  std::vector<Mask> supports;
  for (int pile = 0; pile < n / (d * d); ++pile)
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        Mask line = 0;
        for (int c = 0; c < d; ++c)
          line |= Mask{1} << (pile * d * d + c * d + (a * c + b) % d);
        supports.push_back(line);
      }
  return supports;
}

Gf2Poly grid_lines(int d, int n) {
  check_var_count(n);
  return Gf2Poly(n, grid_supports(d, n));
}

Gf2Poly random_lower_part(int d, int n, double density, std::uint64_t seed) {
  check_var_count(n);
  if (d < 1) throw std::domain_error("need d >= 1");
  std::vector<Mask> monomials;
  if (density > 0) {
    bool all = density >= 1;
    // Threshold compare keeps the draw a pure function of (seed, mask).
    std::uint64_t threshold =
        all ? 0 : static_cast<std::uint64_t>(density * 18446744073709551616.0);
    std::size_t limit = std::size_t{1} << n;
    for (std::size_t m = 0; m < limit; ++m) {
      if (popcount(static_cast<Mask>(m)) >= d) continue;
      if (all || prf64(seed, m) < threshold) monomials.push_back(static_cast<Mask>(m));
    }
  }
  return Gf2Poly(n, std::move(monomials));
}

}  // namespace gf2f
