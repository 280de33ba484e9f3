#include "gf2fourier/fourier.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gf2f {

namespace {

// The cover accumulators fit comfortably in 64 bits: |acc(T)| equals
// 2^|T| |weight(T)|, the weight is a signed sum of Fourier coefficients of
// a +/-1 function (Moebius inversion of the superset-sum identity), and the
// l1 norm of such a spectrum is at most 2^(n/2) by Cauchy-Schwarz, giving
// |acc(T)| <= 2^(n + n/2) <= 2^36 at the n <= 24 cap -- for every prefix of
// the monomial list, since a prefix is itself a polynomial. The checks below
// are belt and braces: if the bound were ever wrong we fail loudly.
void sub_twice_checked(long long& dst, long long v) {
  long long twice;
  if (__builtin_mul_overflow(v, 2LL, &twice) ||
      __builtin_sub_overflow(dst, twice, &dst))
    throw std::overflow_error("cover accumulator overflow");
}

void add_checked(long long& dst, long long v) {
  if (__builtin_add_overflow(dst, v, &dst))
    throw std::overflow_error("cover zeta overflow");
}

std::vector<long long> cover_acc_i64(const Gf2Poly& p) {
  std::size_t size = std::size_t{1} << p.n_vars();
  std::vector<long long> acc(size, 0);
  acc[0] = 1;  // the empty sub-family covers the empty set
  for (Mask s : p.monomials()) {
    // One descending sweep: every U >= their join receives -2 * acc(T) from
    // each T with T | s == U; T = U itself contributes the sign flip.
    for (std::size_t t = size; t-- > 0;) {
      if ((t & s) == s)
        acc[t] = -acc[t];
      else if (acc[t] != 0)
        sub_twice_checked(acc[t | s], acc[t]);
    }
  }
  return acc;
}

std::uint64_t binom_checked(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
    if (r > ~std::uint64_t{0})
      throw std::overflow_error("cover count exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

struct CoverCounter {
  std::span<const Mask> fam;  // members that are subsets of the target
  Mask target = 0;
  int k = 0;
  std::vector<Mask> suffix_union;
  std::uint64_t count = 0;

  void dfs(std::size_t idx, int chosen, Mask covered) {
    if (covered == target) {
      // Any completion keeps the union at target; count them all at once.
      count += binom_checked(fam.size() - idx, static_cast<std::uint64_t>(k - chosen));
      return;
    }
    if (idx == fam.size()) return;
    if (chosen == k) return;
    if ((covered | suffix_union[idx]) != target) return;  // can't reach target
    if (static_cast<std::size_t>(k - chosen) > fam.size() - idx) return;
    dfs(idx + 1, chosen + 1, covered | fam[idx]);
    dfs(idx + 1, chosen, covered);
  }
};

}  // namespace

Spectrum::Spectrum(int n_vars, std::vector<Dyadic> coeffs)
    : n_vars_(n_vars), coeffs_(std::move(coeffs)) {
  check_var_count(n_vars_);
  if (coeffs_.size() != (std::size_t{1} << n_vars_))
    throw std::domain_error("spectrum needs exactly 2^n_vars coefficients");
}

CoverTable::CoverTable(int n_vars, std::vector<BigInt> acc)
    : n_vars_(n_vars), acc_(std::move(acc)) {
  check_var_count(n_vars_);
  if (acc_.size() != (std::size_t{1} << n_vars_))
    throw std::domain_error("cover table needs exactly 2^n_vars entries");
}

Spectrum spectrum_wht(const Gf2Poly& p) {
  int n = p.n_vars();
  auto tt = truth_table(p);
  std::vector<long long> v(tt.size());
  for (std::size_t x = 0; x < tt.size(); ++x) v[x] = tt[x] ? -1 : 1;
  for (std::size_t len = 1; len < v.size(); len <<= 1)
    for (std::size_t i = 0; i < v.size(); i += len << 1)
      for (std::size_t j = i; j < i + len; ++j) {
        long long a = v[j], b = v[j + len];
        v[j] = a + b;  // partial sums stay within +/-2^n, no overflow risk
        v[j + len] = a - b;
      }
  std::vector<Dyadic> coeffs;
  coeffs.reserve(v.size());
  for (long long c : v) coeffs.emplace_back(BigInt(c), n);
  return Spectrum(n, std::move(coeffs));
}

CoverTable cover_table(const Gf2Poly& p) {
  auto acc = cover_acc_i64(p);
  std::vector<BigInt> big(acc.begin(), acc.end());
  return CoverTable(p.n_vars(), std::move(big));
}

Spectrum spectrum_covers(const Gf2Poly& p) {
  int n = p.n_vars();
  auto acc = cover_acc_i64(p);
  // Scale acc(T) to acc(T) * 2^(n-|T|) so the superset sum of weights times
  // 2^n is an integer throughout, then zeta-transform over supersets.
  for (std::size_t t = 0; t < acc.size(); ++t)
    if (acc[t] != 0) {
      long long scale = 1LL << (n - popcount(static_cast<Mask>(t)));
      if (__builtin_mul_overflow(acc[t], scale, &acc[t]))
        throw std::overflow_error("cover scaling overflow");
    }
  for (int i = 0; i < n; ++i) {
    std::size_t bit = std::size_t{1} << i;
    for (std::size_t t = 0; t < acc.size(); ++t)
      if (!(t & bit)) add_checked(acc[t], acc[t | bit]);
  }
  std::vector<Dyadic> coeffs;
  coeffs.reserve(acc.size());
  for (std::size_t s = 0; s < acc.size(); ++s) {
    long long v = (popcount(static_cast<Mask>(s)) & 1) ? -acc[s] : acc[s];
    coeffs.emplace_back(BigInt(v), n);
  }
  return Spectrum(n, std::move(coeffs));
}

std::uint64_t count_k_covers(std::span<const Mask> family, Mask t, int k) {
  if (k < 0) throw std::domain_error("cover size must be nonnegative");
  std::vector<Mask> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::domain_error("family members must be distinct");
  // Members not contained in t can never participate.
  std::vector<Mask> inside;
  for (Mask m : sorted)
    if ((m & ~t) == 0) inside.push_back(m);
  if (k == 0) return t == 0 ? 1 : 0;
  if (static_cast<std::size_t>(k) > inside.size()) return 0;

  CoverCounter cc;
  cc.fam = inside;
  cc.target = t;
  cc.k = k;
  cc.suffix_union.assign(inside.size() + 1, 0);
  for (std::size_t i = inside.size(); i-- > 0;)
    cc.suffix_union[i] = cc.suffix_union[i + 1] | inside[i];
  cc.dfs(0, 0, 0);
  return cc.count;
}

long sparsity(const Spectrum& s) {
  long count = 0;
  for (const Dyadic& c : s.coeffs()) count += !c.is_zero();
  return count;
}

long sparsity01(const Spectrum& s) {
  long count = 0;
  for (std::size_t a = 0; a < s.size(); ++a) {
    const Dyadic& c = s.coeff(static_cast<Mask>(a));
    if (a == 0)
      count += !(c == Dyadic::from_int(1));
    else
      count += !c.is_zero();
  }
  return count;
}

long granularity(const Spectrum& s) {
  long g = 0;
  for (const Dyadic& c : s.coeffs()) {
    if (c.is_zero()) continue;
    if (c.exponent() < 0)
      throw std::logic_error("coefficient granularity below 0: not a +/-1 spectrum");
    g = std::max(g, static_cast<long>(c.exponent()));
  }
  return g;
}

Spectrum restricted_spectrum(const Spectrum& s, Mask form, int bit) {
  int n = s.n_vars();
  if (n == 0 || form == 0 || (form & ~full_mask(n)) != 0)
    throw std::domain_error("restriction form must be nonzero over the spectrum's variables");
  if (bit != 0 && bit != 1) throw std::domain_error("restriction bit must be 0 or 1");
  int p = lowest_bit(form);
  std::size_t half = std::size_t{1} << (n - 1);
  std::vector<Dyadic> out;
  out.reserve(half);
  Mask low_mask = (Mask{1} << p) - 1;
  for (std::size_t g = 0; g < half; ++g) {
    // Re-insert a zero at the pivot position: representatives with <e_p> = 0.
    Mask gamma = static_cast<Mask>(g);
    Mask rep = (gamma & low_mask) | ((gamma >> p) << (p + 1));
    const Dyadic& a = s.coeff(rep);
    const Dyadic& b = s.coeff(rep ^ form);
    out.push_back(bit ? a - b : a + b);
  }
  return Spectrum(n - 1, std::move(out));
}

}  // namespace gf2f
