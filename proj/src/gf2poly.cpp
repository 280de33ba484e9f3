#include "gf2fourier/gf2poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gf2f {

namespace {

// Sorts and keeps the masks that occur an odd number of times.
std::vector<Mask> collect_mod2(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end());
  std::vector<Mask> out;
  out.reserve(masks.size());
  for (std::size_t i = 0; i < masks.size();) {
    std::size_t j = i;
    while (j < masks.size() && masks[j] == masks[i]) ++j;
    if ((j - i) & 1) out.push_back(masks[i]);
    i = j;
  }
  return out;
}

int max_degree(const std::vector<Mask>& monomials) {
  int d = 0;
  for (Mask m : monomials) d = std::max(d, popcount(m));
  return d;
}

// Drops bit `var` from a mask and shifts the higher bits down by one.
Mask drop_bit(Mask m, int var) {
  Mask low = m & ((Mask{1} << var) - 1);
  Mask high = (m >> (var + 1)) << var;
  return low | high;
}

}  // namespace

Gf2Poly::Gf2Poly(int n_vars, std::vector<Mask> monomials) : n_vars_(n_vars) {
  check_var_count(n_vars);
  Mask full = full_mask(n_vars);
  for (Mask m : monomials)
    if ((m & ~full) != 0)
      throw std::domain_error("monomial uses a variable beyond n_vars");
  monomials_ = collect_mod2(std::move(monomials));
  degree_ = max_degree(monomials_);
}

int Gf2Poly::evaluate(Mask point) const {
  if ((point & ~full_mask(n_vars_)) != 0)
    throw std::domain_error("evaluation point has bits beyond n_vars");
  int acc = 0;
  for (Mask m : monomials_) acc ^= ((point & m) == m);
  return acc;
}

Gf2Poly Gf2Poly::top_monomials() const {
  if (is_zero())
    throw std::domain_error("zero polynomial has no top monomials");
  std::vector<Mask> top;
  for (Mask m : monomials_)
    if (popcount(m) == degree_) top.push_back(m);
  return Gf2Poly(n_vars_, std::move(top));
}

Gf2Poly Gf2Poly::restrict_var(int var, int bit) const {
  if (var < 0 || var >= n_vars_) throw std::domain_error("variable index out of range");
  if (bit != 0 && bit != 1) throw std::domain_error("restriction bit must be 0 or 1");
  std::vector<Mask> out;
  out.reserve(monomials_.size());
  for (Mask m : monomials_) {
    if (m >> var & 1) {
      if (bit == 0) continue;               // monomial vanishes
      out.push_back(drop_bit(m, var));      // x_var := 1 removes the factor
    } else {
      out.push_back(drop_bit(m, var));
    }
  }
  return Gf2Poly(n_vars_ - 1, std::move(out));
}

Gf2Poly Gf2Poly::substitute_linear(const LinearMap& map) const {
  if (map.n_vars() != n_vars_)
    throw std::domain_error("linear map dimension does not match polynomial");
  auto tt = truth_table(*this);
  std::vector<std::uint8_t> composed(tt.size());
  for (std::size_t x = 0; x < tt.size(); ++x)
    composed[x] = tt[map.apply(static_cast<Mask>(x))];
  return Gf2Poly(n_vars_, anf_from_truth_table(composed, n_vars_));
}

Gf2Poly Gf2Poly::restrict_affine(const LinearSystem& sys) const {
  if (sys.n_vars() != n_vars_)
    throw std::domain_error("system dimension does not match polynomial");
  int r = sys.size();
  if (r == 0) return *this;
  int k = n_vars_ - r;

  std::vector<int> free_pos;  // non-pivot columns, ascending
  free_pos.reserve(k);
  for (int j = 0; j < n_vars_; ++j)
    if (!(sys.pivots() >> j & 1)) free_pos.push_back(j);

  auto tt = truth_table(*this);
  std::vector<std::uint8_t> rest(std::size_t{1} << k);
  for (std::size_t y = 0; y < rest.size(); ++y) {
    // The unique solution of the system whose free coordinates equal y.
    Mask x = 0;
    for (int j = 0; j < k; ++j)
      if (y >> j & 1) x |= Mask{1} << free_pos[j];
    for (int i = 0; i < r; ++i) {
      Mask rest_form = sys.forms()[i] & ~(Mask{1} << lowest_bit(sys.forms()[i]));
      int bit = sys.affine_bits()[i] ^ (popcount(rest_form & x) & 1);
      if (bit) x |= Mask{1} << lowest_bit(sys.forms()[i]);
    }
    rest[y] = tt[x];
  }
  return Gf2Poly(k, anf_from_truth_table(rest, k));
}

Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.n_vars_ != b.n_vars_)
    throw std::domain_error("polynomial variable counts differ");
  // Symmetric difference of two sorted monomial lists.
  std::vector<Mask> out;
  out.reserve(a.monomials_.size() + b.monomials_.size());
  std::set_symmetric_difference(a.monomials_.begin(), a.monomials_.end(),
                                b.monomials_.begin(), b.monomials_.end(),
                                std::back_inserter(out));
  return Gf2Poly(a.n_vars_, std::move(out));
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.n_vars_ != b.n_vars_)
    throw std::domain_error("polynomial variable counts differ");
  std::vector<Mask> out;
  out.reserve(a.monomials_.size() * b.monomials_.size());
  for (Mask ma : a.monomials_)
    for (Mask mb : b.monomials_) out.push_back(ma | mb);
  return Gf2Poly(a.n_vars_, std::move(out));
}

LinearMap::LinearMap(int n_vars, std::vector<Mask> rows)
    : n_vars_(n_vars), rows_(std::move(rows)) {
  check_var_count(n_vars);
  if (static_cast<int>(rows_.size()) != n_vars_)
    throw std::domain_error("linear map needs exactly n_vars rows");
  Mask full = full_mask(n_vars_);
  for (Mask r : rows_)
    if ((r & ~full) != 0) throw std::domain_error("row uses a variable beyond n_vars");
  // Rank check by elimination on a scratch copy.
  std::vector<Mask> work = rows_;
  int rank = 0;
  for (int col = 0; col < n_vars_; ++col) {
    int pivot = -1;
    for (int i = rank; i < n_vars_; ++i)
      if (work[i] >> col & 1) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(work[rank], work[pivot]);
    for (int i = 0; i < n_vars_; ++i)
      if (i != rank && (work[i] >> col & 1)) work[i] ^= work[rank];
    ++rank;
  }
  if (rank != n_vars_) throw std::domain_error("linear map is singular");
}

LinearMap LinearMap::identity(int n_vars) {
  std::vector<Mask> rows(n_vars);
  for (int i = 0; i < n_vars; ++i) rows[i] = Mask{1} << i;
  return LinearMap(n_vars, std::move(rows));
}

Mask LinearMap::apply(Mask x) const {
  Mask y = 0;
  for (int i = 0; i < n_vars_; ++i)
    if (popcount(rows_[i] & x) & 1) y |= Mask{1} << i;
  return y;
}

LinearMap LinearMap::inverse() const {
  // Gauss-Jordan on rows augmented with the identity in the high bits.
  std::vector<std::uint64_t> work(n_vars_);
  for (int i = 0; i < n_vars_; ++i)
    work[i] = rows_[i] | (std::uint64_t{1} << (n_vars_ + i));
  int rank = 0;
  for (int col = 0; col < n_vars_; ++col) {
    int pivot = -1;
    for (int i = rank; i < n_vars_; ++i)
      if (work[i] >> col & 1) { pivot = i; break; }
    std::swap(work[rank], work[pivot]);
    for (int i = 0; i < n_vars_; ++i)
      if (i != rank && (work[i] >> col & 1)) work[i] ^= work[rank];
    ++rank;
  }
  // work[i] now has e_i on the left; the right half is row i of the inverse.
  std::vector<Mask> inv(n_vars_);
  for (int i = 0; i < n_vars_; ++i)
    inv[i] = static_cast<Mask>(work[i] >> n_vars_);
  return LinearMap(n_vars_, std::move(inv));
}

LinearMap LinearMap::transpose() const {
  std::vector<Mask> t(n_vars_, 0);
  for (int i = 0; i < n_vars_; ++i)
    for (int j = 0; j < n_vars_; ++j)
      if (rows_[i] >> j & 1) t[j] |= Mask{1} << i;
  return LinearMap(n_vars_, std::move(t));
}

LinearSystem::LinearSystem(int n_vars, std::vector<Mask> forms,
                           std::vector<int> affine_bits)
    : n_vars_(n_vars) {
  check_var_count(n_vars);
  if (forms.size() != affine_bits.size())
    throw std::domain_error("need one affine bit per form");
  Mask full = full_mask(n_vars_);
  // Incremental RREF: rows already stored contain no other row's pivot, so a
  // single reduction pass per incoming row suffices, followed by eliminating
  // the new pivot from the stored rows.
  for (std::size_t i = 0; i < forms.size(); ++i) {
    Mask cur = forms[i];
    if ((cur & ~full) != 0) throw std::domain_error("form uses a variable beyond n_vars");
    if (affine_bits[i] != 0 && affine_bits[i] != 1)
      throw std::domain_error("affine bit must be 0 or 1");
    std::uint8_t bit = static_cast<std::uint8_t>(affine_bits[i]);
    for (std::size_t j = 0; j < forms_.size(); ++j)
      if (cur >> lowest_bit(forms_[j]) & 1) {
        cur ^= forms_[j];
        bit ^= bits_[j];
      }
    if (cur == 0) {
      if (bit) throw std::domain_error("inconsistent system (0 = 1)");
      throw std::domain_error("forms are linearly dependent");
    }
    int p = lowest_bit(cur);
    for (std::size_t j = 0; j < forms_.size(); ++j)
      if (forms_[j] >> p & 1) {
        forms_[j] ^= cur;
        bits_[j] ^= bit;
      }
    // Insert keeping rows ordered by pivot column.
    std::size_t at = 0;
    while (at < forms_.size() && lowest_bit(forms_[at]) < p) ++at;
    forms_.insert(forms_.begin() + at, cur);
    bits_.insert(bits_.begin() + at, bit);
    pivots_ |= Mask{1} << p;
  }
}

LinearSystem LinearSystem::homogeneous() const {
  LinearSystem h = *this;
  std::fill(h.bits_.begin(), h.bits_.end(), std::uint8_t{0});
  return h;
}

std::vector<std::uint8_t> truth_table(const Gf2Poly& p) {
  int n = p.n_vars();
  std::vector<std::uint8_t> tt(std::size_t{1} << n, 0);
  for (Mask m : p.monomials()) tt[m] = 1;
  // Subset xor-zeta: tt[x] becomes the xor of ANF coefficients over subsets
  // of x, which is exactly evaluation at the point x.
  for (int i = 0; i < n; ++i) {
    std::size_t bit = std::size_t{1} << i;
    for (std::size_t x = 0; x < tt.size(); ++x)
      if (x & bit) tt[x] ^= tt[x ^ bit];
  }
  return tt;
}

std::vector<Mask> anf_from_truth_table(std::span<const std::uint8_t> tt, int n_vars) {
  check_var_count(n_vars);
  if (tt.size() != (std::size_t{1} << n_vars))
    throw std::domain_error("truth table size must be 2^n_vars");
  std::vector<std::uint8_t> a(tt.begin(), tt.end());
  for (int i = 0; i < n_vars; ++i) {
    std::size_t bit = std::size_t{1} << i;
    for (std::size_t x = 0; x < a.size(); ++x)
      if (x & bit) a[x] ^= a[x ^ bit];
  }
  std::vector<Mask> monomials;
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[x]) monomials.push_back(static_cast<Mask>(x));
  return monomials;
}

bool top_equiv(const Gf2Poly& p, const Gf2Poly& q, int d) {
  if (d < 1) throw std::domain_error("top_equiv needs d >= 1");
  return p.degree() == d && q.degree() == d && (p + q).degree() < d;
}

}  // namespace gf2f
