#include "pellcf/oracle.hpp"

#include "doctest.h"

using namespace pellcf;

TEST_CASE("verify_solution") {
  CHECK(oracle::verify_solution(6, 1, 5, 2));
  CHECK(oracle::verify_solution(6, 1, 1, 0));
  CHECK_FALSE(oracle::verify_solution(6, -1, 5, 2));
  Int big = pow_ui(10, 30);
  CHECK(oracle::verify_solution(big * big - 1, 1, big, 1));
}

TEST_CASE("brute_pell frozen examples") {
  auto s = oracle::brute_pell(6, 1, 25);
  REQUIRE(s.size() == 3);
  CHECK(s[0].x == 1);
  CHECK(s[0].y == 0);
  CHECK(s[1].x == 5);
  CHECK(s[1].y == 2);
  CHECK(s[2].x == 49);
  CHECK(s[2].y == 20);

  auto m = oracle::brute_pell(5, -4, 3);
  REQUIRE(m.size() == 2);
  CHECK(m[0].x == 1);
  CHECK(m[0].y == 1);
  CHECK(m[1].x == 4);
  CHECK(m[1].y == 2);
  auto m5 = oracle::brute_pell(5, -4, 5);
  REQUIRE(m5.size() == 3);
  CHECK(m5[2].x == 11);
  CHECK(m5[2].y == 5);

  CHECK(oracle::brute_pell(6, -1, 100).empty());
}

TEST_CASE("brute_fundamental frozen examples") {
  auto f = oracle::brute_fundamental(6, 1, 25);
  REQUIRE(f.has_value());
  CHECK(f->x == 5);
  CHECK(f->y == 2);

  auto g = oracle::brute_fundamental(5, -1, 10);
  REQUIRE(g.has_value());
  CHECK(g->x == 2);
  CHECK(g->y == 1);

  CHECK_FALSE(oracle::brute_fundamental(6, -4, 100).has_value());
}

TEST_CASE("completeness within the bound") {
  // every returned pair re-verifies, and planted solutions are found
  auto s = oracle::brute_pell(13, 4, 40);
  for (const auto& p : s) CHECK(oracle::verify_solution(13, 4, p.x, p.y));
  bool planted = false;
  for (const auto& p : s) planted = planted || (p.x == 11 && p.y == 3);
  CHECK(planted);  // 121 - 13*9 = 4

  auto t = oracle::brute_pell(2, -1, 30);
  bool found29 = false;
  for (const auto& p : t) found29 = found29 || (p.x == 41 && p.y == 29);
  CHECK(found29);  // 41^2 - 2*29^2 = -1
}

TEST_CASE("zero and negative bounds") {
  auto only_trivial = oracle::brute_pell(6, 1, 0);
  REQUIRE(only_trivial.size() == 1);
  CHECK(only_trivial[0].y == 0);
  CHECK(oracle::brute_pell(6, 1, -1).empty());
  CHECK_FALSE(oracle::brute_fundamental(6, 1, 0).has_value());
}
