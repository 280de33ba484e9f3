#include "gf2fourier/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <stdexcept>

#include "gf2fourier/constructions.hpp"
#include "gf2fourier/fourier.hpp"
#include "gf2fourier/lrank.hpp"
#include "gf2fourier/rng.hpp"
#include "gf2fourier/sampling.hpp"

namespace gf2f {

namespace {

using Clock = std::chrono::steady_clock;
using Params = std::vector<std::pair<std::string, std::int64_t>>;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// The shared trial layout for the sparsity suites: trial 0 has no lower
// part, trial 1 every monomial of degree < d, later trials a density-1/2
// draw seeded seed + trial.
Gf2Poly lower_for_trial(int d, int n, int trial, std::uint64_t seed) {
  if (trial == 0) return Gf2Poly::zero(n);
  double density = trial == 1 ? 1.0 : 0.5;
  return random_lower_part(d, n, density, seed + static_cast<std::uint64_t>(trial));
}

bool is_power_of_two(int d) { return d > 0 && (d & (d - 1)) == 0; }

std::string bigpow2_minus1(int e) {
  BigInt v = (BigInt(1) << e) - 1;
  return v.str();
}

// Nonzero-coefficient census of a spectrum: count plus the granularity range.
struct CoeffCensus {
  long nonzero = 0;
  long gran_min = 0;
  long gran_max = 0;
  bool any = false;
};

CoeffCensus census(const Spectrum& s) {
  CoeffCensus c;
  for (const Dyadic& v : s.coeffs()) {
    if (v.is_zero()) continue;
    long g = static_cast<long>(v.exponent());
    if (!c.any) {
      c.gran_min = c.gran_max = g;
      c.any = true;
    } else {
      c.gran_min = std::min(c.gran_min, g);
      c.gran_max = std::max(c.gran_max, g);
    }
    ++c.nonzero;
  }
  return c;
}

std::string census_str(const CoeffCensus& c) {
  if (!c.any) return "0 nonzero";
  return std::to_string(c.nonzero) + " nonzero, granularity " +
         (c.gran_min == c.gran_max
              ? std::to_string(c.gran_min)
              : std::to_string(c.gran_min) + ".." + std::to_string(c.gran_max));
}

}  // namespace

std::vector<Report> verify_complete_lrank(int n_max) {
  if (n_max < 1 || n_max > 8)
    throw std::domain_error("brute-force rank sweep supports 1 <= n_max <= 8");
  std::vector<Report> out;
  for (int n = 1; n <= n_max; ++n)
    for (int d = 1; d <= n; ++d) {
      auto t0 = Clock::now();
      int want = complete_uniform_lrank(d, n);
      auto got = linear_rank(complete_uniform(d, n), n);
      Report r;
      r.claim = "complete_uniform_lrank_bruteforce";
      r.params = Params{{"d", d}, {"n", n}};
      r.expected = std::to_string(want);
      r.observed = got ? std::to_string(*got) : "not found";
      r.pass = got && *got == want;
      r.runtime_ms = ms_since(t0);
      out.push_back(std::move(r));
    }
  return out;
}

std::vector<Report> verify_complete_sparsity(int d, int n, int trials,
                                             std::uint64_t seed) {
  if (!is_power_of_two(d) || d < 2)
    throw std::domain_error("complete sparsity suite needs d a power of two, d >= 2");
  if (d > n || n > 14) throw std::domain_error("need d <= n <= 14");
  if (trials < 0) throw std::domain_error("trials must be nonnegative");
  int k = n / d;
  int nr = k * d;  // variables kept by the restriction
  std::vector<Report> out;
  Gf2Poly top = complete_uniform(d, n);
  for (int t = 0; t < trials + 2; ++t) {
    Gf2Poly f = top + lower_for_trial(d, n, t, seed);
    Params params{{"d", d}, {"n", n}, {"trial", t}};

    auto t0 = Clock::now();
    Spectrum s = spectrum_wht(f);
    long spar = sparsity01(s);
    Report r1;
    r1.claim = "complete_top_sparsity";
    r1.params = params;
    r1.expected = ">= " + bigpow2_minus1(nr);
    r1.observed = std::to_string(spar);
    r1.pass = spar >= (1L << nr) - 1;
    r1.runtime_ms = ms_since(t0);
    out.push_back(std::move(r1));

    t0 = Clock::now();
    Gf2Poly g = f;
    for (int i = n - 1; i >= nr; --i) g = g.restrict_var(i, 0);
    CoeffCensus c = census(spectrum_wht(g));
    Report r2;
    r2.claim = "complete_top_restricted_coeffs";
    r2.params = params;
    r2.expected = std::to_string(std::int64_t{1} << nr) +
                  " nonzero, granularity " + std::to_string(nr - k);
    r2.observed = census_str(c);
    r2.pass = c.nonzero == (1L << nr) && c.any && c.gran_min == nr - k &&
              c.gran_max == nr - k;
    r2.runtime_ms = ms_since(t0);
    out.push_back(std::move(r2));
  }
  return out;
}

std::vector<Report> verify_disjoint_sparsity(int d, int n, int trials,
                                             std::uint64_t seed) {
  if (d < 2) throw std::domain_error("disjoint sparsity suite needs d >= 2");
  if (n % d != 0 || n > 14) throw std::domain_error("need d dividing n <= 14");
  if (trials < 0) throw std::domain_error("trials must be nonnegative");
  std::vector<Report> out;
  Gf2Poly top = disjoint_blocks(d, n);
  for (int t = 0; t < trials + 2; ++t) {
    Gf2Poly f = top + lower_for_trial(d, n, t, seed);
    Params params{{"d", d}, {"n", n}, {"trial", t}};

    auto t0 = Clock::now();
    Spectrum s = spectrum_wht(f);
    long spar = sparsity01(s);
    Report r1;
    r1.claim = "disjoint_top_sparsity";
    r1.params = params;
    r1.expected = ">= " + bigpow2_minus1(n);
    r1.observed = std::to_string(spar);
    r1.pass = spar >= (1L << n) - 1;
    r1.runtime_ms = ms_since(t0);
    out.push_back(std::move(r1));

    t0 = Clock::now();
    const Dyadic& full = s.coeff(full_mask(n));
    Report r2;
    r2.claim = "disjoint_full_coeff_gran";
    r2.params = params;
    r2.expected = "nonzero, granularity " + std::to_string(n - n / d);
    r2.observed = full.is_zero() ? "zero"
                                 : "nonzero, granularity " +
                                       std::to_string(full.exponent());
    r2.pass = !full.is_zero() && full.exponent() == n - n / d;
    r2.runtime_ms = ms_since(t0);
    out.push_back(std::move(r2));
  }
  return out;
}

std::vector<Report> verify_grid_sparsity(int d, int n, int trials,
                                         std::uint64_t seed) {
  if (trials < 0) throw std::domain_error("trials must be nonnegative");
  auto supports = grid_supports(d, n);  // validates d and n
  std::vector<Report> out;

  auto t0 = Clock::now();
  std::uint64_t want = 1;
  for (int i = 0; i < n / (d * d); ++i) want *= static_cast<std::uint64_t>(d);
  std::uint64_t got = count_k_covers(supports, full_mask(n), n / d);
  Report part;
  part.claim = "grid_partition_count";
  part.params = Params{{"d", d}, {"n", n}};
  part.expected = std::to_string(want);
  part.observed = std::to_string(got);
  part.pass = got == want;
  part.runtime_ms = ms_since(t0);
  out.push_back(std::move(part));

  if (n > 14) return out;  // spectra out of reach; partition count only

  Gf2Poly top = grid_lines(d, n);
  for (int t = 0; t < trials + 2; ++t) {
    Gf2Poly f = top + lower_for_trial(d, n, t, seed);
    Params params{{"d", d}, {"n", n}, {"trial", t}};

    t0 = Clock::now();
    Spectrum s = spectrum_wht(f);
    long spar = sparsity01(s);
    Report r1;
    r1.claim = "grid_top_sparsity";
    r1.params = params;
    r1.expected = ">= " + bigpow2_minus1(n);
    r1.observed = std::to_string(spar);
    r1.pass = spar >= (1L << n) - 1;
    r1.runtime_ms = ms_since(t0);
    out.push_back(std::move(r1));

    t0 = Clock::now();
    const Dyadic& full = s.coeff(full_mask(n));
    Report r2;
    r2.claim = "grid_full_coeff_gran";
    r2.params = params;
    r2.expected = "nonzero, granularity " + std::to_string(n - n / d);
    r2.observed = full.is_zero() ? "zero"
                                 : "nonzero, granularity " +
                                       std::to_string(full.exponent());
    r2.pass = !full.is_zero() && full.exponent() == n - n / d;
    r2.runtime_ms = ms_since(t0);
    out.push_back(std::move(r2));
  }
  return out;
}

std::vector<Report> verify_granularity_bound(int d, int n, int trials,
                                             std::uint64_t seed) {
  if (d < 1 || d > n || n > 14)
    throw std::domain_error("need 1 <= d <= n <= 14");
  if (trials < 0) throw std::domain_error("trials must be nonnegative");
  int bound = n - (n + d - 1) / d;  // n - ceil(n/d)
  std::vector<Report> out;
  for (int t = 0; t < trials + 2; ++t) {
    Gf2Poly f = t < 2 ? complete_uniform(d, n) + lower_for_trial(d, n, t, seed)
                      : random_poly_exact_degree(
                            d, n, seed + static_cast<std::uint64_t>(t));
    auto t0 = Clock::now();
    long g = granularity(spectrum_wht(f));
    Report r;
    r.claim = "degree_granularity_cap";
    r.params = Params{{"d", d}, {"n", n}, {"trial", t}};
    r.expected = "<= " + std::to_string(bound);
    r.observed = std::to_string(g);
    r.pass = g <= bound;
    r.runtime_ms = ms_since(t0);
    out.push_back(std::move(r));
  }
  if (n % d == 0) {
    auto t0 = Clock::now();
    long g = granularity(spectrum_wht(disjoint_blocks(d, n)));
    Report r;
    r.claim = "degree_granularity_tightness";
    r.params = Params{{"d", d}, {"n", n}};
    r.expected = "= " + std::to_string(n - n / d);
    r.observed = std::to_string(g);
    r.pass = g == n - n / d;
    r.runtime_ms = ms_since(t0);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Report> verify_preliminaries(int n, int trials, std::uint64_t seed) {
  if (n < 1 || n > 12) throw std::domain_error("need 1 <= n <= 12");
  if (trials < 0) throw std::domain_error("trials must be nonnegative");
  std::vector<Report> out;
  for (int t = 0; t < trials; ++t) {
    std::uint64_t ts = seed + static_cast<std::uint64_t>(t);
    Gf2Poly f = random_poly(n, mix64(ts ^ 0x11));
    Gf2Poly g = random_poly(n, mix64(ts ^ 0x22));
    Params params{{"n", n}, {"trial", t}};

    auto t0 = Clock::now();
    Spectrum sf = spectrum_wht(f);
    long spm = sparsity(sf);
    long s01 = sparsity01(sf);
    Report a;
    a.claim = "range_switch_sparsity";
    a.params = params;
    a.expected = "|spar01 - spar| <= 1";
    a.observed = "spar01 " + std::to_string(s01) + ", spar " + std::to_string(spm);
    a.pass = std::abs(s01 - spm) <= 1;
    a.runtime_ms = ms_since(t0);
    out.push_back(std::move(a));

    t0 = Clock::now();
    Mask form = random_nonzero_mask(n, mix64(ts ^ 0x33));
    int bit = static_cast<int>(prf64(ts, 0x44) >> 63);
    long restricted = sparsity(restricted_spectrum(sf, form, bit));
    Report b;
    b.claim = "restriction_sparsity_nonincrease";
    b.params = params;
    b.expected = "<= " + std::to_string(spm);
    b.observed = std::to_string(restricted);
    b.pass = restricted <= spm;
    b.runtime_ms = ms_since(t0);
    out.push_back(std::move(b));

    t0 = Clock::now();
    long gran_f = granularity(sf);
    Report c;
    c.claim = "sparsity_granularity_sandwich";
    c.params = params;
    c.expected = "2^(gran+1) <= spar <= 4^gran, or spar 1 with gran 0";
    c.observed = "spar " + std::to_string(spm) + ", gran " + std::to_string(gran_f);
    c.pass = spm >= 2 ? (std::int64_t{1} << (gran_f + 1)) <= spm &&
                            spm <= (std::int64_t{1} << (2 * gran_f))
                      : gran_f == 0;
    c.runtime_ms = ms_since(t0);
    out.push_back(std::move(c));

    t0 = Clock::now();
    Spectrum sg = spectrum_wht(g);
    Spectrum sh = spectrum_wht(f + g);
    // Exact convolution check on numerators scaled by 2^n: products sum to
    // the sum's coefficients scaled by 2^(2n), well within int64 at n <= 12.
    std::size_t size = sf.size();
    std::vector<long long> vf(size), vg(size);
    for (std::size_t i = 0; i < size; ++i) {
      const Dyadic& cf = sf.coeff(static_cast<Mask>(i));
      const Dyadic& cg = sg.coeff(static_cast<Mask>(i));
      vf[i] = cf.is_zero() ? 0
                           : static_cast<long long>(cf.numerator())
                                 << (n - cf.exponent());
      vg[i] = cg.is_zero() ? 0
                           : static_cast<long long>(cg.numerator())
                                 << (n - cg.exponent());
    }
    bool conv_ok = true;
    for (std::size_t al = 0; al < size && conv_ok; ++al) {
      long long acc = 0;
      for (std::size_t be = 0; be < size; ++be) acc += vf[be] * vg[al ^ be];
      const Dyadic& ch = sh.coeff(static_cast<Mask>(al));
      long long hv = ch.is_zero() ? 0
                                  : static_cast<long long>(ch.numerator())
                                        << (n - ch.exponent());
      conv_ok = acc == (hv << n);
    }
    long gran_g = granularity(sg), gran_h = granularity(sh);
    bool gran_ok = gran_h <= gran_f + gran_g &&
                   gran_h >= std::abs(gran_f - gran_g);
    Report dd;
    dd.claim = "xor_spectrum_convolution";
    dd.params = params;
    dd.expected = "spectrum of f+g is the convolution; |gf-gg| <= gh <= gf+gg";
    dd.observed = std::string(conv_ok ? "convolution match" : "convolution mismatch") +
                  ", gf " + std::to_string(gran_f) + " gg " + std::to_string(gran_g) +
                  " gh " + std::to_string(gran_h);
    dd.pass = conv_ok && gran_ok;
    dd.runtime_ms = ms_since(t0);
    out.push_back(std::move(dd));

    t0 = Clock::now();
    LinearMap L = random_invertible_map(n, mix64(ts ^ 0x55));
    Spectrum sfl = spectrum_wht(f.substitute_linear(L));
    LinearMap perm = L.transpose().inverse();
    bool perm_ok = true;
    for (std::size_t al = 0; al < size && perm_ok; ++al)
      perm_ok = sfl.coeff(static_cast<Mask>(al)) ==
                sf.coeff(perm.apply(static_cast<Mask>(al)));
    Report e;
    e.claim = "linear_map_invariance";
    e.params = params;
    e.expected = "composed spectrum is a permutation; sparsity and granularity equal";
    e.observed = std::string(perm_ok ? "permutation match" : "permutation mismatch") +
                 ", spar " + std::to_string(sparsity(sfl)) + " vs " +
                 std::to_string(spm) + ", gran " +
                 std::to_string(granularity(sfl)) + " vs " + std::to_string(gran_f);
    e.pass = perm_ok && sparsity(sfl) == spm && granularity(sfl) == gran_f;
    e.runtime_ms = ms_since(t0);
    out.push_back(std::move(e));
  }
  return out;
}

bool all_pass(std::span<const Report> reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const Report& r) { return r.pass; });
}

nlohmann::ordered_json reports_to_json(std::span<const Report> reports,
                                       bool with_timings) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Report& r : reports) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    nlohmann::ordered_json item = {{"claim", r.claim},
                                   {"params", std::move(params)},
                                   {"expected", r.expected},
                                   {"observed", r.observed},
                                   {"pass", r.pass}};
    if (with_timings) item["runtime_ms"] = r.runtime_ms;
    arr.push_back(std::move(item));
  }
  return arr;
}

}  // namespace gf2f
