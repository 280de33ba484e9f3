#pragma once

#include <cstdint>

#include "gf2fourier/gf2poly.hpp"

namespace gf2f {

// Deterministic pseudorandom objects for tests and verification suites.
// Everything is a pure function of its arguments (counter-based PRF under
// the hood), so suites replay identically across runs and platforms.

// Each of the 2^n monomials included independently with probability 1/2.
Gf2Poly random_poly(int n, std::uint64_t seed);

// Density-1/2 polynomial of degree exactly d: monomials on up to d variables
// are sampled, and the lowest d-subset mask is added if the draw happens to
// contain no degree-d monomial at all.
Gf2Poly random_poly_exact_degree(int d, int n, std::uint64_t seed);

// Uniformly drawn nonzero mask over n variables.
Mask random_nonzero_mask(int n, std::uint64_t seed);

// Invertible change of variables; rows are drawn until the matrix is
// nonsingular (a constant expected number of draws).
LinearMap random_invertible_map(int n, std::uint64_t seed);

// Homogeneous-or-affine system of r independent constraints; forms are drawn
// until independent, affine bits drawn uniformly.
LinearSystem random_system(int n, int r, std::uint64_t seed);

}  // namespace gf2f
