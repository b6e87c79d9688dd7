#include "pellcf/integer.hpp"

#include <random>

#include "doctest.h"

using namespace pellcf;

TEST_CASE("isqrt on frozen values") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(24) == 4);
  Int big = pow_ui(10, 40);
  CHECK(isqrt(big) == pow_ui(10, 20));
  CHECK_THROWS_AS(isqrt(-1), Error);
}

TEST_CASE("isqrt bracketing property") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 2000; ++trial) {
    Int n = Int(rng() >> (trial % 40));
    if (trial % 3 == 0) n = n * n + Int(rng() % 1000);  // near squares
    Int r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
}

TEST_CASE("perfect square detection") {
  for (long v = 0; v <= 2000; ++v) {
    Int n = v;
    Int r = isqrt(n);
    CHECK(is_perfect_square(n) == (r * r == n));
  }
  CHECK_FALSE(is_perfect_square(-4));
}

TEST_CASE("floor division rounds toward minus infinity") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, -2) == -4);
  CHECK(floor_div(-7, -2) == 3);
  CHECK_THROWS_AS(floor_div(1, 0), Error);
}

TEST_CASE("exact division guards divisibility") {
  CHECK(exact_div(84, 7) == 12);
  CHECK_THROWS_AS(exact_div(85, 7), Error);
}

TEST_CASE("binomial values") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(64, 32) == Int("1832624140942590534"));
  CHECK(binomial(5, 9) == 0);
}
