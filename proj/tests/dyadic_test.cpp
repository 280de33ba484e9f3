#include <doctest.h>

#include "gf2fourier/dyadic.hpp"
#include "gf2fourier/rng.hpp"

using gf2f::BigInt;
using gf2f::Dyadic;

TEST_CASE("normal form strips twos from the numerator") {
  Dyadic a(BigInt(4), 3);  // 4/8
  CHECK(a.numerator() == 1);
  CHECK(a.exponent() == 1);

  Dyadic b(BigInt(-6), 4);  // -6/16
  CHECK(b.numerator() == -3);
  CHECK(b.exponent() == 3);

  Dyadic c(BigInt(12), 0);  // the integer 12
  CHECK(c.numerator() == 3);
  CHECK(c.exponent() == -2);

  Dyadic z(BigInt(0), 7);
  CHECK(z.is_zero());
  CHECK(z.exponent() == 0);
  CHECK(z == Dyadic());
}

TEST_CASE("normal form is unique") {
  // m/2^k and (m * 2^j)/2^(k+j) are the same value and must normalize to the
  // same representation.
  for (long long m : {1LL, -1LL, 3LL, -7LL, 35LL, 1001LL})
    for (int k : {-3, 0, 2, 9})
      for (int j : {1, 4, 11}) {
        Dyadic direct{BigInt(m), k};
        Dyadic scaled{BigInt(m) << j, k + j};
        CHECK(direct == scaled);
      }
}

TEST_CASE("addition aligns exponents") {
  Dyadic half(BigInt(1), 1);
  CHECK(half + half == Dyadic::from_int(1));
  CHECK((half + half).to_string() == "1");

  Dyadic quarter(BigInt(1), 2), eighth(BigInt(1), 3);
  Dyadic sum = quarter + eighth;
  CHECK(sum.numerator() == 3);
  CHECK(sum.exponent() == 3);
  CHECK(sum.to_string() == "3/8");

  CHECK((sum + (-sum)).is_zero());
  CHECK(sum - sum == Dyadic());
  CHECK(Dyadic() + sum == sum);
}

TEST_CASE("multiplication adds exponents") {
  Dyadic a(BigInt(3), 3);             // 3/8
  Dyadic b(BigInt(-1), 1);            // -1/2
  CHECK((a * b).to_string() == "-3/16");
  CHECK((a * Dyadic()).is_zero());
  CHECK(a * Dyadic::from_int(1) == a);
  // (-1/2) * (-1/2) = 1/4
  CHECK(b * b == Dyadic(BigInt(1), 2));
}

TEST_CASE("granularity is the normal-form exponent") {
  CHECK(gf2f::granularity_of(Dyadic(BigInt(35), 3)) == 3);
  CHECK(gf2f::granularity_of(Dyadic(BigInt(1), 0)) == 0);
  CHECK(gf2f::granularity_of(Dyadic(BigInt(6), 0)) == -1);  // 6 = 3 * 2
  CHECK(gf2f::granularity_of(Dyadic()) == std::nullopt);
}

TEST_CASE("string form") {
  CHECK(Dyadic().to_string() == "0");
  CHECK(Dyadic::from_int(-4).to_string() == "-4");
  CHECK(Dyadic(BigInt(35), 3).to_string() == "35/8");
  CHECK(Dyadic(BigInt(-1), 1).to_string() == "-1/2");
  // Exponents far beyond 64 bits must not overflow the denominator.
  Dyadic tiny(BigInt(1), 100);
  CHECK(tiny.to_string() ==
        "1/1267650600228229401496703205376");
}

TEST_CASE("ring identities on pseudorandom values") {
  auto draw = [](std::uint64_t c) {
    auto bits = gf2f::prf64(42, c);
    long long m = static_cast<long long>(bits % 2001) - 1000;
    int k = static_cast<int>((bits >> 32) % 9) - 4;
    return Dyadic(BigInt(m), k);
  };
  for (std::uint64_t i = 0; i < 40; ++i) {
    Dyadic a = draw(3 * i), b = draw(3 * i + 1), c = draw(3 * i + 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}
