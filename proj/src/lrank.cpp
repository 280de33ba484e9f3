#include "gf2fourier/lrank.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace gf2f {

namespace {

// Workspace for repeated "does this homogeneous system kill the top degree"
// checks against one fixed polynomial. The truth table of the top part is
// computed once; each candidate system then costs O(2^(n-r) (n-r)): evaluate
// the top part on the subspace (parametrized by its free coordinates), take
// the ANF of that restriction, and look for a surviving degree-d monomial.
// Lower-degree monomials of p never produce degree-d terms under a linear
// substitution, so checking the top part alone is exact.
struct TopDropChecker {
  int n = 0;
  int d = 0;
  std::vector<std::uint8_t> top_tt;
  std::vector<std::uint8_t> rest;
  std::vector<int> free_pos;

  TopDropChecker(const Gf2Poly& p)
      : n(p.n_vars()), d(p.degree()), top_tt(truth_table(p.top_monomials())) {
    rest.resize(top_tt.size());
    free_pos.reserve(n);
  }

  // forms must be in RREF with lowest-set-bit pivots; affine parts ignored.
  bool drops(std::span<const Mask> forms) {
    int r = static_cast<int>(forms.size());
    int k = n - r;
    Mask pivots = 0;
    for (Mask f : forms) pivots |= Mask{1} << lowest_bit(f);
    free_pos.clear();
    for (int j = 0; j < n; ++j)
      if (!(pivots >> j & 1)) free_pos.push_back(j);

    std::size_t points = std::size_t{1} << k;
    for (std::size_t y = 0; y < points; ++y) {
      Mask x = 0;
      for (int j = 0; j < k; ++j)
        if (y >> j & 1) x |= Mask{1} << free_pos[j];
      for (Mask f : forms) {
        Mask rest_form = f & ~(Mask{1} << lowest_bit(f));
        if (popcount(rest_form & x) & 1) x |= Mask{1} << lowest_bit(f);
      }
      rest[y] = top_tt[x];
    }
    // Moebius back to ANF on the k free variables, then scan for a monomial
    // of full degree d.
    for (int i = 0; i < k; ++i) {
      std::size_t bit = std::size_t{1} << i;
      for (std::size_t y = 0; y < points; ++y)
        if (y & bit) rest[y] ^= rest[y ^ bit];
    }
    for (std::size_t y = 0; y < points; ++y)
      if (rest[y] && popcount(static_cast<Mask>(y)) == d) return false;
    return true;
  }
};

// Visits every rank-r RREF system over n variables (lowest-bit pivot
// convention) in a fixed order; stops early when f returns true.
template <typename F>
bool for_each_rref_system(int n, int r, F&& f) {
  std::vector<int> pc(r);
  for (int i = 0; i < r; ++i) pc[i] = i;  // first pivot-column combination
  std::vector<Mask> rows(r);
  for (;;) {
    Mask pivots = 0;
    for (int c : pc) pivots |= Mask{1} << c;
    // Fillable slots: (row i, column j) with j above row i's pivot and j not
    // itself a pivot. Row-major, ascending column.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < r; ++i)
      for (int j = pc[i] + 1; j < n; ++j)
        if (!(pivots >> j & 1)) slots.emplace_back(i, j);
    if (slots.size() >= 63)
      throw ResourceLimitError("rank search space exceeds 2^63 systems");
    std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t counter = 0; counter < total; ++counter) {
      for (int i = 0; i < r; ++i) rows[i] = Mask{1} << pc[i];
      for (std::size_t b = 0; b < slots.size(); ++b)
        if (counter >> b & 1) rows[slots[b].first] |= Mask{1} << slots[b].second;
      if (f(std::span<const Mask>(rows))) return true;
    }
    // Next combination of pivot columns in lexicographic order.
    int i = r - 1;
    while (i >= 0 && pc[i] == n - r + i) --i;
    if (i < 0) return false;
    ++pc[i];
    for (int j = i + 1; j < r; ++j) pc[j] = pc[j - 1] + 1;
  }
}

void check_rank_inputs(const Gf2Poly& p, int r_max) {
  if (p.is_constant())
    throw std::domain_error("linear rank is undefined for constant polynomials");
  if (r_max < 1 || r_max > p.n_vars())
    throw std::domain_error("r_max must be between 1 and n_vars");
}

}  // namespace

bool degree_drops(const Gf2Poly& p, const LinearSystem& sys) {
  if (p.is_zero())
    throw std::domain_error("degree_drops is undefined for the zero polynomial");
  if (sys.n_vars() != p.n_vars())
    throw std::domain_error("system dimension does not match polynomial");
  if (sys.size() == 0) return false;  // empty restriction changes nothing
  if (p.is_constant()) return false;  // degree 0 cannot drop
  TopDropChecker checker(p);
  return checker.drops(sys.forms());
}

std::optional<int> linear_rank(const Gf2Poly& p, int r_max) {
  auto w = linear_rank_witness(p, r_max);
  if (!w) return std::nullopt;
  return w->rank;
}

std::optional<int> linear_rank(const Gf2Poly& p) {
  return linear_rank(p, p.n_vars());
}

std::optional<LrankWitness> linear_rank_witness(const Gf2Poly& p, int r_max) {
  check_rank_inputs(p, r_max);
  TopDropChecker checker(p);
  for (int r = 1; r <= r_max; ++r) {
    std::vector<Mask> found;
    bool hit = for_each_rref_system(p.n_vars(), r, [&](std::span<const Mask> rows) {
      if (!checker.drops(rows)) return false;
      found.assign(rows.begin(), rows.end());
      return true;
    });
    if (hit) {
      std::vector<int> bits(found.size(), 0);
      return LrankWitness{r, LinearSystem(p.n_vars(), found, bits)};
    }
  }
  return std::nullopt;
}

int complete_uniform_lrank(int d, int n) {
  if (d < 1 || d > n) throw std::domain_error("need 1 <= d <= n");
  if (d % 2 == 1) return 1;
  return n / 2 - d / 2 + 1;
}

int binom_parity(std::uint64_t s, std::uint64_t t) {
  if (t > s) throw std::domain_error("binom_parity needs t <= s");
  return (t & (s - t)) == 0 ? 1 : 0;
}

}  // namespace gf2f
