#pragma once

#include <cstdint>
#include <optional>

#include "gf2fourier/gf2poly.hpp"

namespace gf2f {

// True iff restricting p to the subspace cut out by sys lowers its degree.
// Only the homogeneous part of sys matters: shifting a restriction by an
// affine offset composes with an affine substitution of the arguments and
// cannot change the top-degree part, so the check runs with all affine bits
// zeroed regardless of what sys carries. Errors on the zero polynomial.
bool degree_drops(const Gf2Poly& p, const LinearSystem& sys);

// Smallest number r of independent linear constraints whose imposition
// lowers the degree of p, found by iterative deepening over all r-dimensional
// constraint subspaces in RREF form. Returns nullopt when no system of rank
// <= r_max works (possible only when r_max < n_vars: a full basis always
// leaves a constant). Exponential in r*(n-r); meant for small n.
std::optional<int> linear_rank(const Gf2Poly& p, int r_max);
std::optional<int> linear_rank(const Gf2Poly& p);

struct LrankWitness {
  int rank;
  LinearSystem system;
};

// Same search, also returning the first dropping system in the fixed
// enumeration order (pivot-column sets ascending lexicographically, then
// free entries from an ascending binary counter over (row, column) slots
// in row-major order), which makes the witness deterministic.
std::optional<LrankWitness> linear_rank_witness(const Gf2Poly& p, int r_max);

// Closed form for the linear rank of the complete d-uniform polynomial on
// n variables: 1 when d is odd, floor(n/2) - d/2 + 1 when d is even.
// Requires 1 <= d <= n.
int complete_uniform_lrank(int d, int n);

// C(s, t) mod 2 via the carry rule: odd iff t & (s - t) == 0.
int binom_parity(std::uint64_t s, std::uint64_t t);

}  // namespace gf2f
