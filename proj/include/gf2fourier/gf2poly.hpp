#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gf2fourier/masks.hpp"

namespace gf2f {

class LinearMap;
class LinearSystem;

// Multilinear polynomial over GF(2) in algebraic normal form: an xor of
// distinct monomials, each monomial a subset of variables (a Mask). The
// monomial list is kept sorted ascending with no duplicates, so equal
// polynomials compare equal structurally. Value semantics throughout.
class Gf2Poly {
 public:
  // Collects the given monomials mod 2 (a mask appearing twice cancels).
  // Masks must use only bits below n_vars; 0 <= n_vars <= kMaxVars.
  Gf2Poly(int n_vars, std::vector<Mask> monomials);

  static Gf2Poly zero(int n_vars) { return Gf2Poly(n_vars, {}); }
  static Gf2Poly one(int n_vars) { return Gf2Poly(n_vars, {Mask{0}}); }

  int n_vars() const { return n_vars_; }
  const std::vector<Mask>& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }
  bool is_constant() const { return degree_ == 0; }

  // Total degree; 0 for the zero polynomial and for the constant 1.
  int degree() const { return degree_; }

  // Evaluation at a point of {0,1}^n, the point encoded as a mask of the
  // variables set to 1. Returns 0 or 1.
  int evaluate(Mask point) const;

  // The homogeneous top part: all monomials of maximal degree, as a
  // polynomial on the same variables. Errors on the zero polynomial,
  // which has no top part.
  Gf2Poly top_monomials() const;

  // Substitute x_{var+1} := bit (var is 0-based) and relabel the remaining
  // variables downward, yielding a polynomial on n_vars-1 variables.
  Gf2Poly restrict_var(int var, int bit) const;

  // p(Lx) for an invertible L: each variable is replaced by the xor of the
  // variables in the corresponding row of L. Degree is preserved. Computed
  // through the truth table, so the 2^n cap applies.
  Gf2Poly substitute_linear(const LinearMap& map) const;

  // Restriction to the affine subspace {x : sys holds}: each pivot variable
  // of the RREF system is substituted by its row's non-pivot part plus the
  // affine bit, and the surviving variables are relabeled downward. Result
  // has n_vars - sys.size() variables.
  Gf2Poly restrict_affine(const LinearSystem& sys) const;

  friend Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b);
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
  friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) = default;

 private:
  int n_vars_ = 0;
  int degree_ = 0;
  std::vector<Mask> monomials_;
};

// An invertible linear change of variables on GF(2)^n. Row i (a mask) lists
// the variables whose xor replaces x_{i+1}. Construction rejects singular
// matrices.
class LinearMap {
 public:
  LinearMap(int n_vars, std::vector<Mask> rows);
  static LinearMap identity(int n_vars);

  int n_vars() const { return n_vars_; }
  const std::vector<Mask>& rows() const { return rows_; }

  // y with y_i = <row_i, x> over GF(2).
  Mask apply(Mask x) const;

  LinearMap inverse() const;
  LinearMap transpose() const;

  friend bool operator==(const LinearMap& a, const LinearMap& b) = default;

 private:
  int n_vars_ = 0;
  std::vector<Mask> rows_;
};

// A system of r independent affine constraints <form_i, x> = bit_i over
// GF(2)^n. The constructor brings the rows into reduced row echelon form
// with the *lowest* set bit of each row as its pivot, rows ordered by pivot;
// dependent or inconsistent inputs are rejected. r = 0 (no constraints) is
// allowed; r = n pins a single point.
class LinearSystem {
 public:
  LinearSystem(int n_vars, std::vector<Mask> forms, std::vector<int> affine_bits);
  static LinearSystem empty(int n_vars) { return LinearSystem(n_vars, {}, {}); }

  int n_vars() const { return n_vars_; }
  int size() const { return static_cast<int>(forms_.size()); }
  const std::vector<Mask>& forms() const { return forms_; }
  const std::vector<std::uint8_t>& affine_bits() const { return bits_; }

  // Mask of all pivot columns.
  Mask pivots() const { return pivots_; }

  // Same forms with every affine bit forced to 0.
  LinearSystem homogeneous() const;

  friend bool operator==(const LinearSystem& a, const LinearSystem& b) = default;

 private:
  int n_vars_ = 0;
  Mask pivots_ = 0;
  std::vector<Mask> forms_;
  std::vector<std::uint8_t> bits_;
};

// Truth table of p on all 2^n points, index = point mask. Subject to the
// 2^n cap.
std::vector<std::uint8_t> truth_table(const Gf2Poly& p);

// Inverse of truth_table: the ANF monomials of the function given by tt
// (size must be 2^n). The transform is its own inverse over GF(2).
std::vector<Mask> anf_from_truth_table(std::span<const std::uint8_t> tt, int n_vars);

// True iff p and q both have degree exactly d and agree on their degree-d
// part, i.e. degree(p + q) < d.
bool top_equiv(const Gf2Poly& p, const Gf2Poly& q, int d);

}  // namespace gf2f
