#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gf2fourier/constructions.hpp"
#include "gf2fourier/fourier.hpp"
#include "gf2fourier/lrank.hpp"
#include "gf2fourier/masks.hpp"

using gf2f::complete_uniform;
using gf2f::complete_uniform_restrictions;
using gf2f::disjoint_blocks;
using gf2f::Gf2Poly;
using gf2f::grid_supports;
using gf2f::Mask;
using gf2f::popcount;

namespace {
std::uint64_t choose(int n, int k) {
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}
}  // namespace

TEST_CASE("complete uniform polynomials") {
  CHECK(complete_uniform(2, 4).monomials() ==
        std::vector<Mask>{3, 5, 6, 9, 10, 12});
  CHECK(complete_uniform(0, 3) == Gf2Poly::one(3));
  CHECK(complete_uniform(3, 3) == Gf2Poly(3, {0b111}));
  for (int n = 0; n <= 10; ++n)
    for (int d = 0; d <= n; ++d) {
      Gf2Poly p = complete_uniform(d, n);
      CHECK(p.monomials().size() == choose(n, d));
      CHECK(p.degree() == d);
      for (Mask m : p.monomials()) CHECK(popcount(m) == d);
    }
  CHECK_THROWS_AS(complete_uniform(-1, 3), std::domain_error);
  CHECK_THROWS_AS(complete_uniform(4, 3), std::domain_error);
}

TEST_CASE("canonical restriction systems for even degree") {
  CHECK(complete_uniform_restrictions(2, 4).forms() ==
        std::vector<Mask>{0b0010, 0b1100});
  CHECK(complete_uniform_restrictions(2, 5).forms() ==
        std::vector<Mask>{0b00110, 0b11000});
  CHECK(complete_uniform_restrictions(4, 6).forms() ==
        std::vector<Mask>{0b001000, 0b110000});
  CHECK_THROWS_AS(complete_uniform_restrictions(3, 5), std::domain_error);
  CHECK_THROWS_AS(complete_uniform_restrictions(0, 4), std::domain_error);
  CHECK_THROWS_AS(complete_uniform_restrictions(4, 3), std::domain_error);
}

TEST_CASE("restriction systems meet the rank bound and drop the degree") {
  for (int n = 2; n <= 10; ++n)
    for (int d = 2; d <= n; d += 2) {
      gf2f::LinearSystem sys = complete_uniform_restrictions(d, n);
      CHECK(sys.size() == gf2f::complete_uniform_lrank(d, n));
      CHECK(gf2f::degree_drops(complete_uniform(d, n), sys));
    }
}

TEST_CASE("disjoint block products") {
  CHECK(disjoint_blocks(2, 6).monomials() ==
        std::vector<Mask>{0b000011, 0b001100, 0b110000});
  CHECK(disjoint_blocks(3, 3) == Gf2Poly(3, {0b111}));
  CHECK(disjoint_blocks(1, 3) == complete_uniform(1, 3));
  CHECK_THROWS_AS(disjoint_blocks(0, 4), std::domain_error);
  CHECK_THROWS_AS(disjoint_blocks(4, 6), std::domain_error);
}

TEST_CASE("grid lines on one three-by-three pile") {
  std::vector<Mask> lines = grid_supports(3, 9);
  REQUIRE(lines.size() == 9);
  // Slope-zero lines are the rows of the grid.
  CHECK(lines[0] == 0b001001001);
  CHECK(lines[1] == 0b010010010);
  CHECK(lines[2] == 0b100100100);
  const Mask full = 0b111111111;
  for (Mask l : lines) CHECK(popcount(l) == 3);
  for (int a = 0; a < 3; ++a) {
    // Lines of one slope partition the pile.
    CHECK((lines[3 * a] | lines[3 * a + 1] | lines[3 * a + 2]) == full);
    CHECK((lines[3 * a] & lines[3 * a + 1]) == 0);
  }
  // Lines of different slopes meet in exactly one cell.
  for (int i = 0; i < 9; ++i)
    for (int j = i + 1; j < 9; ++j)
      if (i / 3 != j / 3) CHECK(popcount(lines[i] & lines[j]) == 1);
  // Each variable lies on one line per slope.
  for (int v = 0; v < 9; ++v) {
    int cnt = 0;
    for (Mask l : lines)
      if ((l >> v) & 1) ++cnt;
    CHECK(cnt == 3);
  }
}

TEST_CASE("grid partitions count to an odd power of the prime") {
  auto l9 = grid_supports(3, 9);
  CHECK(gf2f::count_k_covers(l9, 0b111111111, 3) == 3);
  auto l18 = grid_supports(3, 18);
  REQUIRE(l18.size() == 18);
  CHECK(gf2f::count_k_covers(l18, gf2f::full_mask(18), 6) == 9);
  auto l25 = grid_supports(5, 25);
  REQUIRE(l25.size() == 25);
  CHECK(gf2f::count_k_covers(l25, gf2f::full_mask(25), 5) == 5);
}

TEST_CASE("grid argument validation") {
  CHECK(gf2f::grid_lines(3, 9).degree() == 3);
  CHECK_THROWS_AS(gf2f::grid_lines(5, 25), gf2f::ResourceLimitError);
  CHECK_THROWS_AS(grid_supports(2, 4), std::domain_error);
  CHECK_THROWS_AS(grid_supports(9, 81), std::domain_error);
  CHECK_THROWS_AS(grid_supports(3, 12), std::domain_error);
  CHECK_THROWS_AS(grid_supports(7, 49), std::domain_error);  // 49 > 32
}

TEST_CASE("pseudorandom lower parts") {
  Gf2Poly a = gf2f::random_lower_part(3, 8, 0.5, 7);
  CHECK(a == gf2f::random_lower_part(3, 8, 0.5, 7));
  CHECK(a != gf2f::random_lower_part(3, 8, 0.5, 8));
  for (Mask m : a.monomials()) CHECK(popcount(m) < 3);

  CHECK(gf2f::random_lower_part(3, 8, 0.0, 7).is_zero());
  Gf2Poly all = gf2f::random_lower_part(3, 8, 1.0, 7);
  CHECK(all.monomials().size() == choose(8, 0) + choose(8, 1) + choose(8, 2));
  CHECK(gf2f::random_lower_part(3, 8, 2.0, 7) == all);
  CHECK(gf2f::random_lower_part(1, 4, 1.0, 7) == Gf2Poly::one(4));
  CHECK_THROWS_AS(gf2f::random_lower_part(0, 4, 0.5, 7), std::domain_error);
}
