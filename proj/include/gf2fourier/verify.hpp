#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace gf2f {

// One checked claim instance. `expected` spells the relation the claim
// demands ("3", ">= 511", ...), `observed` the computed value; `pass` is the
// evaluated relation. runtime_ms is measured but kept out of the canonical
// JSON so identical runs serialize identically.
struct Report {
  std::string claim;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::string expected;
  std::string observed;
  bool pass = false;
  double runtime_ms = 0.0;
};

// Brute-force linear rank of every complete d-uniform polynomial with
// 1 <= d <= n <= n_max against the closed-form value. n_max <= 8.
std::vector<Report> verify_complete_lrank(int n_max);

// For a power-of-two d >= 2 and n <= 14: polynomials whose top part is the
// complete d-uniform polynomial, with the lower part swept over the zero
// polynomial (trial 0), every lower monomial (trial 1), and density-1/2
// draws seeded seed + trial. Checks the 0/1 sparsity lower bound
// 2^(d*floor(n/d)) - 1 and, on the restriction to the first d*floor(n/d)
// variables, that every +/-1 coefficient is nonzero with granularity
// exactly d*floor(n/d) - floor(n/d).
std::vector<Report> verify_complete_sparsity(int d, int n, int trials,
                                             std::uint64_t seed);

// Same trial layout over disjoint_blocks(d, n) tops, d >= 2 dividing n,
// n <= 14: 0/1 sparsity >= 2^n - 1 and granularity exactly n - n/d at the
// all-variables coefficient.
std::vector<Report> verify_disjoint_sparsity(int d, int n, int trials,
                                             std::uint64_t seed);

// Grid-line tops (odd prime d, d^2 | n <= 32): the number of exact covers of
// all variables by n/d of the lines must be d^(n/d^2) (odd). When n <= 14,
// additionally the sparsity/granularity checks of the disjoint suite on the
// same trial layout; for larger n the partition count alone.
std::vector<Report> verify_grid_sparsity(int d, int n, int trials,
                                         std::uint64_t seed);

// Random polynomials of degree exactly d on n <= 14 variables: granularity
// of the +/-1 spectrum is at most n - ceil(n/d). Trial 0 uses the complete
// d-uniform top with no lower part, trial 1 every monomial of degree <= d,
// later trials density-1/2 draws. When d divides n the disjoint-blocks
// polynomial is appended as a tightness witness (granularity == n - n/d).
std::vector<Report> verify_granularity_bound(int d, int n, int trials,
                                             std::uint64_t seed);

// Spot checks of the basic spectral toolbox on uniform random polynomials
// over n <= 12 variables. Per trial: the 0/1-vs-+/-1 sparsity gap is at most
// one; restricting along a random affine hyperplane never increases
// sparsity; log2(sparsity) sits between granularity + 1 (when sparsity >= 2;
// a single-coefficient spectrum forces granularity 0) and 2 * granularity;
// the spectrum of a sum is the xor-convolution of the spectra with the
// expected granularity bounds; composing with a random invertible map
// permutes the spectrum via the inverse-transpose and preserves sparsity
// and granularity.
std::vector<Report> verify_preliminaries(int n, int trials, std::uint64_t seed);

bool all_pass(std::span<const Report> reports);

// Canonical JSON array of reports; timings only on request.
nlohmann::ordered_json reports_to_json(std::span<const Report> reports,
                                       bool with_timings = false);

}  // namespace gf2f
