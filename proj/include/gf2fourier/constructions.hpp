#pragma once

#include <cstdint>
#include <vector>

#include "gf2fourier/gf2poly.hpp"

namespace gf2f {

// Sum of all degree-d monomials on n variables (the complete d-uniform
// polynomial). d = 0 gives the constant 1. Requires 0 <= d <= n.
Gf2Poly complete_uniform(int d, int n);

// The explicit degree-dropping restriction system for complete_uniform(d, n)
// with even d >= 2: for even n the forms are {x_d} and the pair sums
// {x_{d+1}+x_{d+2}}, ..., {x_{n-1}+x_n}; for odd n just the pair sums
// {x_d+x_{d+1}}, ..., {x_{n-1}+x_n}. All affine bits are 0. The system size
// equals complete_uniform_lrank(d, n), i.e. the bound is met with equality.
LinearSystem complete_uniform_restrictions(int d, int n);

// n/d pairwise disjoint degree-d monomials on consecutive variable blocks
// (an inner-product-style polynomial; d = n gives the single AND monomial).
// Requires d >= 1 and d | n.
Gf2Poly disjoint_blocks(int d, int n);

// Supports of the grid-line monomials for an odd prime d with d^2 | n: the
// variables split into n/d^2 piles, each pile a d x d grid indexed by
// (column c, value v) at bit pile*d^2 + c*d + v, and every line
// {(c, (a*c + b) mod d) : c} of every pile contributes one degree-d monomial.
// Returns raw masks so wide instances (n up to 32) can feed cover counting;
// grid_lines wraps them into a polynomial subject to the usual cap.
std::vector<Mask> grid_supports(int d, int n);
Gf2Poly grid_lines(int d, int n);

// Deterministic pseudorandom polynomial of degree < d: every monomial on
// fewer than d variables is included independently with the given density,
// decided by a counter-based PRF keyed with (seed, monomial mask). Same
// arguments, same polynomial, on every platform. density outside [0,1] is
// clamped; d >= 1 required.
Gf2Poly random_lower_part(int d, int n, double density, std::uint64_t seed);

}  // namespace gf2f
