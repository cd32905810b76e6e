#include <doctest.h>

#include <cstdint>
#include <random>

#include "hsaw/bigint.hpp"

using hsaw::BigUint;

TEST_CASE("biguint basics") {
  CHECK(BigUint().is_zero());
  CHECK(BigUint(0).is_zero());
  CHECK(BigUint(42).str() == "42");
  CHECK(BigUint(18446744073709551615ull).str() == "18446744073709551615");
}

TEST_CASE("biguint addition carries") {
  BigUint a(18446744073709551615ull);
  a += BigUint(1);
  CHECK(a.str() == "18446744073709551616");
  CHECK_FALSE(a.fits_u64());
}

TEST_CASE("biguint multiplication matches u64 within range") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t x = rng() % 3000000000ull, y = rng() % 3000000000ull;
    BigUint p = BigUint(x) * BigUint(y);
    CHECK(p.str() == std::to_string(x * y));  // < 2^64, no overflow
  }
}

TEST_CASE("biguint large product known value") {
  // 2^128 = 340282366920938463463374607431768211456
  BigUint p(1);
  for (int i = 0; i < 4; ++i) p = p * BigUint(4294967296ull);
  CHECK(p.str() == "340282366920938463463374607431768211456");
}

TEST_CASE("biguint small multiply accumulates like repeated addition") {
  BigUint a(123456789);
  BigUint sum;
  for (int i = 0; i < 7; ++i) sum += a;
  BigUint b = a;
  b *= 7;
  CHECK(sum == b);
}

TEST_CASE("biguint halving") {
  BigUint a(1);
  for (int i = 0; i < 5; ++i) a *= 4294967295u;
  BigUint twice = a * BigUint(2);
  CHECK(twice.is_even());
  CHECK(twice.half() == a);
  BigUint odd(3);
  CHECK_THROWS(odd.half());
}

TEST_CASE("biguint ordering") {
  CHECK(BigUint(5) < BigUint(7));
  CHECK(BigUint(7) > BigUint(5));
  BigUint big = BigUint(1) * BigUint(18446744073709551615ull) * BigUint(3);
  CHECK(BigUint(17) < big);
}

TEST_CASE("biguint to_double") {
  CHECK(BigUint(1000000).to_double() == doctest::Approx(1e6));
  BigUint p(10);
  for (int i = 0; i < 19; ++i) p *= 10;
  CHECK(p.to_double() == doctest::Approx(1e20).epsilon(1e-12));
}
