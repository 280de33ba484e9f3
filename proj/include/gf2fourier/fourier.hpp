#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gf2fourier/dyadic.hpp"
#include "gf2fourier/gf2poly.hpp"
#include "gf2fourier/masks.hpp"

namespace gf2f {

// Fourier spectrum of the +/-1 version of a Boolean function: coefficient
// at character alpha is 2^-n * sum_x (1-2f(x)) * (-1)^<alpha,x>, stored
// exactly. Index = character mask.
class Spectrum {
 public:
  Spectrum(int n_vars, std::vector<Dyadic> coeffs);

  int n_vars() const { return n_vars_; }
  std::size_t size() const { return coeffs_.size(); }
  const Dyadic& coeff(Mask alpha) const { return coeffs_.at(alpha); }
  const std::vector<Dyadic>& coeffs() const { return coeffs_; }

  friend bool operator==(const Spectrum& a, const Spectrum& b) = default;

 private:
  int n_vars_ = 0;
  std::vector<Dyadic> coeffs_;
};

// Accumulator table of the signed cover counts of a polynomial: for each
// subset T of variables, acc(T) = sum over sub-families M of the monomial
// list whose union is exactly T of (-2)^|M|, and weight(T) = acc(T) / 2^|T|.
// Summing weight over supersets of S (with sign (-1)^|S|) reproduces the
// Fourier coefficient at S; see spectrum_covers.
class CoverTable {
 public:
  CoverTable(int n_vars, std::vector<BigInt> acc);

  int n_vars() const { return n_vars_; }
  const BigInt& acc(Mask t) const { return acc_.at(t); }
  Dyadic weight(Mask t) const { return Dyadic(acc_.at(t), popcount(t)); }

 private:
  int n_vars_ = 0;
  std::vector<BigInt> acc_;
};

// Spectrum by brute force: truth table, then an in-place Walsh-Hadamard
// butterfly on integer values, exact throughout. O(n 2^n).
Spectrum spectrum_wht(const Gf2Poly& p);

// The cover accumulator table of p, built monomial-at-a-time: appending a
// monomial S maps acc(U) to acc(U) - 2 * sum_{T : T union S = U} acc(T),
// which one descending in-place sweep realizes. O(m 2^n).
CoverTable cover_table(const Gf2Poly& p);

// Spectrum via the cover table: coefficient at S is (-1)^|S| times the sum
// of weight(T) over T containing S (a superset-sum zeta transform on scaled
// integers). Agrees with spectrum_wht exactly, coefficient by coefficient;
// the two routes share no code beyond the truth table. O((m + n) 2^n).
Spectrum spectrum_covers(const Gf2Poly& p);

// Number of k-element sub-families of `family` (distinct members required)
// whose union is exactly t. k = 0 counts the empty family, whose union is
// the empty set. k larger than the family size yields 0. Pure subset
// arithmetic on masks; no 2^n enumeration, so wide masks are fine.
std::uint64_t count_k_covers(std::span<const Mask> family, Mask t, int k);

// Number of nonzero coefficients of the +/-1 spectrum.
long sparsity(const Spectrum& s);

// Number of nonzero coefficients of the 0/1 spectrum of the same function,
// recovered from the +/-1 spectrum via f_hat(a) = (delta_{a,0} - s(a)) / 2.
long sparsity01(const Spectrum& s);

// Largest granularity over the nonzero coefficients; 0 for a constant
// function. Rejects spectra with a coefficient of negative granularity,
// which cannot arise from a +/-1-valued function.
long granularity(const Spectrum& s);

// Spectrum of the restriction of the underlying function to the affine
// subspace {x : <form, x> = bit}, on n_vars-1 relabeled variables: the
// coefficient at gamma is s(gamma') + (-1)^bit * s(gamma' + form), where
// gamma' re-expands gamma with a zero inserted at form's lowest set bit.
// Matches spectrum_wht of restrict_affine on the one-row system exactly.
Spectrum restricted_spectrum(const Spectrum& s, Mask form, int bit);

}  // namespace gf2f
