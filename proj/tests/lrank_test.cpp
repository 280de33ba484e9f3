#include <doctest.h>

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "gf2fourier/constructions.hpp"
#include "gf2fourier/lrank.hpp"
#include "gf2fourier/sampling.hpp"

using gf2f::complete_uniform;
using gf2f::complete_uniform_lrank;
using gf2f::degree_drops;
using gf2f::Gf2Poly;
using gf2f::linear_rank;
using gf2f::LinearSystem;
using gf2f::Mask;

TEST_CASE("binomial parity") {
  CHECK(gf2f::binom_parity(0, 0) == 1);
  CHECK(gf2f::binom_parity(5, 1) == 1);
  CHECK(gf2f::binom_parity(4, 2) == 0);
  CHECK(gf2f::binom_parity(5, 2) == 0);
  CHECK(gf2f::binom_parity(7, 3) == 1);  // 35
  CHECK_THROWS_AS(gf2f::binom_parity(2, 3), std::domain_error);

  // Against the Pascal recurrence in exact 64-bit arithmetic.
  std::uint64_t row[21] = {1};
  for (int s = 0; s <= 20; ++s) {
    for (int t = s; t > 0; --t) row[t] += row[t - 1];
    for (int t = 0; t <= s; ++t)
      CHECK(gf2f::binom_parity(s, t) == static_cast<int>(row[t] & 1));
  }
}

TEST_CASE("closed-form rank of complete uniform polynomials") {
  CHECK(complete_uniform_lrank(3, 7) == 1);
  CHECK(complete_uniform_lrank(1, 1) == 1);
  CHECK(complete_uniform_lrank(2, 2) == 1);
  CHECK(complete_uniform_lrank(2, 4) == 2);
  CHECK(complete_uniform_lrank(2, 6) == 3);
  CHECK(complete_uniform_lrank(4, 6) == 2);
  CHECK(complete_uniform_lrank(4, 9) == 3);
  CHECK_THROWS_AS(complete_uniform_lrank(0, 3), std::domain_error);
  CHECK_THROWS_AS(complete_uniform_lrank(3, 2), std::domain_error);
}

TEST_CASE("degree drop detection") {
  // The canonical restriction system lowers the complete 2-uniform degree.
  CHECK(degree_drops(complete_uniform(2, 4),
                     gf2f::complete_uniform_restrictions(2, 4)));
  // An unrelated variable cannot lower the degree of x1.
  Gf2Poly x1(2, {0b01});
  CHECK_FALSE(degree_drops(x1, LinearSystem(2, {0b10}, {0})));
  // Pinning x1 itself sends x1 to a constant.
  CHECK(degree_drops(x1, LinearSystem(2, {0b01}, {0})));
  // Odd-degree complete polynomials die on the even-weight slice: on
  // x1+...+x5 = 0 every point has even weight, and C(even, 3) is even.
  CHECK(degree_drops(complete_uniform(3, 5),
                     LinearSystem(5, {0b11111}, {0})));
  // Only the homogeneous part matters for the top degree.
  CHECK(degree_drops(complete_uniform(3, 5),
                     LinearSystem(5, {0b11111}, {1})));
  CHECK_THROWS_AS(degree_drops(Gf2Poly::zero(3), LinearSystem::empty(3)),
                  std::domain_error);
}

TEST_CASE("brute-force rank on complete polynomials") {
  CHECK(linear_rank(complete_uniform(3, 6)) == 1);
  CHECK(linear_rank(complete_uniform(2, 2)) == 1);
  CHECK(linear_rank(complete_uniform(2, 6)) == 3);
  CHECK(linear_rank(complete_uniform(4, 8)) == 3);
  CHECK(linear_rank(complete_uniform(2, 6), 2) == std::nullopt);
  CHECK_THROWS_AS(linear_rank(Gf2Poly::one(3)), std::domain_error);
  CHECK_THROWS_AS(linear_rank(complete_uniform(1, 3), 0), std::domain_error);
}

TEST_CASE("witness system is minimal, dropping, and deterministic") {
  auto w = gf2f::linear_rank_witness(complete_uniform(2, 6), 6);
  REQUIRE(w.has_value());
  CHECK(w->rank == 3);
  CHECK(w->system.forms() == std::vector<Mask>{0b010001, 0b001010, 0b000100});
  CHECK(degree_drops(complete_uniform(2, 6), w->system));

  for (std::uint64_t s = 0; s < 6; ++s) {
    Gf2Poly p = gf2f::random_poly_exact_degree(3, 5, 40 + s);
    auto a = gf2f::linear_rank_witness(p, 5);
    REQUIRE(a.has_value());
    CHECK(degree_drops(p, a->system));
    CHECK(a->system.size() == a->rank);
    CHECK(linear_rank(p) == a->rank);
    auto again = gf2f::linear_rank_witness(p, 5);
    CHECK(again->system == a->system);
  }
}

TEST_CASE("rank is invariant under invertible substitution") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    Gf2Poly p = gf2f::random_poly_exact_degree(3, 5, 60 + s);
    gf2f::LinearMap L = gf2f::random_invertible_map(5, 70 + s);
    CHECK(linear_rank(p.substitute_linear(L)) == linear_rank(p));
  }
}

TEST_CASE("affine bits never change whether the degree drops") {
  for (std::uint64_t s = 0; s < 8; ++s) {
    Gf2Poly p = gf2f::random_poly_exact_degree(2, 6, 80 + s);
    LinearSystem sys = gf2f::random_system(6, 2, 90 + s);
    CHECK(degree_drops(p, sys) == degree_drops(p, sys.homogeneous()));
  }
}
