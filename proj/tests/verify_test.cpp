#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "gf2fourier/verify.hpp"

using gf2f::all_pass;
using gf2f::Report;
using gf2f::reports_to_json;

TEST_CASE("brute-force rank sweep") {
  auto reps = gf2f::verify_complete_lrank(4);
  REQUIRE(reps.size() == 10);  // one per pair 1 <= d <= n <= 4
  CHECK(all_pass(reps));
  CHECK(reps[0].claim == "complete_uniform_lrank_bruteforce");
  CHECK(reps[0].params ==
        std::vector<std::pair<std::string, std::int64_t>>{{"d", 1}, {"n", 1}});
  CHECK(reps[0].expected == "1");
  CHECK(reps[0].observed == "1");
  CHECK_THROWS_AS(gf2f::verify_complete_lrank(0), std::domain_error);
  CHECK_THROWS_AS(gf2f::verify_complete_lrank(9), std::domain_error);
}

TEST_CASE("complete-top sparsity suite") {
  auto reps = gf2f::verify_complete_sparsity(2, 6, 1, 0);
  REQUIRE(reps.size() == 6);  // 3 trials (2 extremes + 1 random), 2 claims each
  CHECK(all_pass(reps));
  CHECK(reps[0].claim == "complete_top_sparsity");
  CHECK(reps[0].expected == ">= 63");  // 2^6 - 1
  CHECK(reps[1].claim == "complete_top_restricted_coeffs");
  CHECK_THROWS_AS(gf2f::verify_complete_sparsity(3, 6, 1, 0),
                  std::domain_error);
  CHECK_THROWS_AS(gf2f::verify_complete_sparsity(1, 6, 1, 0),
                  std::domain_error);
  CHECK_THROWS_AS(gf2f::verify_complete_sparsity(2, 16, 1, 0),
                  std::domain_error);
  CHECK_THROWS_AS(gf2f::verify_complete_sparsity(2, 6, -1, 0),
                  std::domain_error);
}

TEST_CASE("disjoint-top sparsity suite") {
  auto reps = gf2f::verify_disjoint_sparsity(3, 6, 2, 1);
  REQUIRE(reps.size() == 8);
  CHECK(all_pass(reps));
  CHECK(reps[0].claim == "disjoint_top_sparsity");
  CHECK(reps[1].claim == "disjoint_full_coeff_gran");
  CHECK(reps[1].expected == "nonzero, granularity 4");  // n - n/d = 6 - 2
  CHECK_THROWS_AS(gf2f::verify_disjoint_sparsity(1, 6, 1, 0),
                  std::domain_error);
  CHECK_THROWS_AS(gf2f::verify_disjoint_sparsity(2, 7, 1, 0),
                  std::domain_error);
}

TEST_CASE("grid suite counts partitions and, when small, spectra") {
  auto reps = gf2f::verify_grid_sparsity(3, 9, 1, 0);
  REQUIRE(reps.size() == 7);  // partition count + 3 trials x 2 claims
  CHECK(all_pass(reps));
  CHECK(reps[0].claim == "grid_partition_count");
  CHECK(reps[0].expected == "3");
  CHECK(reps[0].observed == "3");

  auto wide = gf2f::verify_grid_sparsity(3, 18, 5, 0);
  REQUIRE(wide.size() == 1);  // too wide for spectra; partition count only
  CHECK(wide[0].observed == "9");
  CHECK(all_pass(wide));
  CHECK_THROWS_AS(gf2f::verify_grid_sparsity(2, 4, 1, 0), std::domain_error);
}

TEST_CASE("granularity cap suite") {
  auto reps = gf2f::verify_granularity_bound(2, 6, 1, 0);
  REQUIRE(reps.size() == 4);  // 3 trials + tightness witness (2 divides 6)
  CHECK(all_pass(reps));
  CHECK(reps[0].claim == "degree_granularity_cap");
  CHECK(reps[0].expected == "<= 3");  // n - ceil(n/d) = 6 - 3
  CHECK(reps[3].claim == "degree_granularity_tightness");
  CHECK(reps[3].expected == "= 3");

  auto nodiv = gf2f::verify_granularity_bound(3, 7, 1, 0);
  REQUIRE(nodiv.size() == 3);  // 7 is not a multiple of 3: no witness report
  CHECK(all_pass(nodiv));
  CHECK_THROWS_AS(gf2f::verify_granularity_bound(0, 5, 1, 0),
                  std::domain_error);
  CHECK_THROWS_AS(gf2f::verify_granularity_bound(2, 16, 1, 0),
                  std::domain_error);
}

TEST_CASE("spectral toolbox spot checks") {
  auto reps = gf2f::verify_preliminaries(6, 10, 1);
  REQUIRE(reps.size() == 50);  // 5 claims per trial
  CHECK(all_pass(reps));
  CHECK_THROWS_AS(gf2f::verify_preliminaries(0, 1, 0), std::domain_error);
  CHECK_THROWS_AS(gf2f::verify_preliminaries(13, 1, 0), std::domain_error);
}

TEST_CASE("pass aggregation") {
  std::vector<Report> reps = gf2f::verify_complete_lrank(2);
  CHECK(all_pass(reps));
  reps[1].pass = false;
  CHECK_FALSE(all_pass(reps));
  CHECK(all_pass(std::vector<Report>{}));
}

TEST_CASE("canonical report serialization") {
  Report r;
  r.claim = "demo";
  r.params = {{"n", 3}, {"trial", 0}};
  r.expected = "1";
  r.observed = "1";
  r.pass = true;
  r.runtime_ms = 5.25;
  std::vector<Report> one{r};
  CHECK(reports_to_json(one).dump() ==
        R"([{"claim":"demo","params":{"n":3,"trial":0},"expected":"1",)"
        R"("observed":"1","pass":true}])");
  // Timings only on request, so identical runs serialize identically.
  auto timed = reports_to_json(one, true);
  CHECK(timed[0].contains("runtime_ms"));
  CHECK(timed[0]["runtime_ms"] == 5.25);
}

TEST_CASE("suites replay identically") {
  auto a = gf2f::verify_preliminaries(7, 5, 42);
  auto b = gf2f::verify_preliminaries(7, 5, 42);
  CHECK(reports_to_json(a).dump() == reports_to_json(b).dump());
  auto c = gf2f::verify_disjoint_sparsity(2, 8, 3, 9);
  auto d = gf2f::verify_disjoint_sparsity(2, 8, 3, 9);
  CHECK(reports_to_json(c).dump() == reports_to_json(d).dump());
}
