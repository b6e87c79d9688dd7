#include "pellcf/cf.hpp"

#include <numeric>
#include <vector>

#include "doctest.h"
#include "pellcf/integer.hpp"

using namespace pellcf;

namespace {

// Reference expansion for sqrt(d), written independently of the library
// path: 64-bit arithmetic and the classical termination criterion (the
// period of sqrt(d) ends at the first partial quotient equal to 2*a0).
struct RefCF {
  long a0;
  std::vector<long> period;
};

RefCF ref_sqrt_cf(long d) {
  long a0 = 0;
  while ((a0 + 1) * (a0 + 1) <= d) ++a0;
  RefCF out{a0, {}};
  long p = a0, q = d - a0 * a0;
  for (;;) {
    long a = (a0 + p) / q;
    out.period.push_back(a);
    if (a == 2 * a0) break;
    p = a * q - p;
    q = (d - p * p) / q;
  }
  return out;
}

// Symbolic iterate x_j of the expansion of (u + v sqrt(d)) / w, stored as an
// exact triple. Steps by x -> 1/(x - a), i.e. field arithmetic in Q(sqrt(d)),
// not the library's P/Q recurrence.
struct FieldElem {
  Int u, v, w;  // (u + v sqrt(d)) / w

  void normalize() {
    Int g = gcd(gcd(u, v), w);
    if (g != 0) {
      u /= g;
      v /= g;
      w /= g;
    }
    if (w < 0) {
      u = -u;
      v = -v;
      w = -w;
    }
  }

  bool operator==(const FieldElem&) const = default;
};

FieldElem step(FieldElem x, const Int& a, const Int& d) {
  // 1/((u - a w + v sqrt(d)) / w) = w (u' - v sqrt(d)) / (u'^2 - v^2 d)
  Int u1 = x.u - a * x.w;
  FieldElem next{x.w * u1, -x.w * x.v, u1 * u1 - x.v * x.v * d};
  next.normalize();
  return next;
}

}  // namespace

TEST_CASE("cf_expand frozen examples") {
  auto cf6 = cf_expand(QuadIrrational::sqrt_of(6));
  CHECK(cf6.a0() == 2);
  CHECK(cf6.period == std::vector<Int>{2, 4});

  auto cf14 = cf_expand(QuadIrrational::sqrt_of(14));
  CHECK(cf14.a0() == 3);
  CHECK(cf14.period == std::vector<Int>{1, 2, 1, 6});

  auto cf2 = cf_expand(QuadIrrational::sqrt_of(2));
  CHECK(cf2.a0() == 1);
  CHECK(cf2.period == std::vector<Int>{2});
}

TEST_CASE("cf_expand rejects square radicands") {
  CHECK_THROWS_AS(cf_expand(QuadIrrational::sqrt_of(4)), Error);
  CHECK_THROWS_AS(cf_expand(QuadIrrational::sqrt_of(1)), Error);
  CHECK_THROWS_AS(cf_expand(QuadIrrational{6, 0, 0}), Error);
  try {
    cf_expand(QuadIrrational::sqrt_of(9));
    FAIL("expected square_radicand");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::square_radicand);
  }
}

TEST_CASE("cf_expand honors the state cap") {
  try {
    cf_expand(QuadIrrational::sqrt_of(1726), 3);
    FAIL("expected period_limit_exceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::period_limit_exceeded);
  }
}

TEST_CASE("sqrt expansions match the reference for d <= 3000") {
  for (long d = 2; d <= 3000; ++d) {
    if (is_perfect_square(Int(d))) continue;
    RefCF ref = ref_sqrt_cf(d);
    CFExpansion cf = cf_expand(QuadIrrational::sqrt_of(d));
    REQUIRE(cf.head.size() == 1);
    CHECK(cf.a0() == ref.a0);
    REQUIRE(cf.period_length() == ref.period.size());
    for (std::size_t i = 0; i < ref.period.size(); ++i)
      CHECK(cf.period[i] == ref.period[i]);
    CHECK(cf.terminal_is_twice_a0());
    CHECK(cf.inner_palindrome());
  }
}

TEST_CASE("symbolic re-expansion returns to the period start") {
  // Walk x -> 1/(x - a) in Q(sqrt(d)) along head + two periods and check the
  // iterate is periodic exactly where the expansion claims.
  auto check = [](const QuadIrrational& in) {
    QuadIrrational x = in.normalized();
    CFExpansion cf = cf_expand(in);
    FieldElem cur{x.p0, 1, x.q0};
    cur.normalize();
    PartialQuotients quots(cf);
    for (std::size_t i = 0; i < cf.head.size(); ++i)
      cur = step(cur, quots.next(), x.d);
    FieldElem at_period_start = cur;
    for (std::size_t i = 0; i < cf.period_length(); ++i)
      cur = step(cur, quots.next(), x.d);
    CHECK(cur == at_period_start);
  };
  for (long d = 2; d <= 500; ++d) {
    if (is_perfect_square(Int(d))) continue;
    check(QuadIrrational::sqrt_of(d));
    if (d % 4 == 1) check(QuadIrrational::half_integer(d));
  }
  check(QuadIrrational{2, 0, 2});
  check(QuadIrrational{19, 11, 3});
  check(QuadIrrational{13, -7, 2});
}

TEST_CASE("general quadratic irrationals") {
  // golden ratio (1 + sqrt(5))/2 = [1; 1, 1, ...]
  auto phi = cf_expand(QuadIrrational::half_integer(5));
  CHECK(phi.head == std::vector<Int>{1});
  CHECK(phi.period == std::vector<Int>{1});

  auto om13 = cf_expand(QuadIrrational::half_integer(13));
  CHECK(om13.head == std::vector<Int>{2});
  CHECK(om13.period == std::vector<Int>{3});

  // sqrt(2)/2 has a two-term head
  auto g = cf_expand(QuadIrrational{2, 0, 2});
  CHECK(g.head == std::vector<Int>{0, 1});
  CHECK(g.period == std::vector<Int>{2});

  // denominator not dividing d - p0^2 gets rescaled, value unchanged:
  // (0 + sqrt(2))/3 = sqrt(18)/9
  auto h = cf_expand(QuadIrrational{2, 0, 3});
  CHECK(h.head.front() == 0);
  // negative value: (-5 + sqrt(2))/1, head starts below zero
  auto n = cf_expand(QuadIrrational{2, -5, 1});
  CHECK(n.head.front() == -4);
  for (const Int& q : n.period) CHECK(q >= 1);
}

TEST_CASE("period_length examples") {
  CHECK(period_length(QuadIrrational::sqrt_of(6)) == 2);
  CHECK(period_length(QuadIrrational::sqrt_of(14)) == 4);
  // d = (a^k b^l)^2 + 1 has period 1
  for (long x : {2, 3, 6, 10, 15}) {
    Int d = Int(x) * x + 1;
    CHECK(period_length(QuadIrrational::sqrt_of(d)) == 1);
  }
}

TEST_CASE("convergents frozen examples and invariants") {
  auto cf6 = cf_expand(QuadIrrational::sqrt_of(6));
  auto cv6 = convergents(cf6, 2);
  CHECK(cv6[0].p == 2);
  CHECK(cv6[0].q == 1);
  CHECK(cv6[1].p == 5);
  CHECK(cv6[1].q == 2);

  auto cf2 = cf_expand(QuadIrrational::sqrt_of(2));
  auto cv2 = convergents(cf2, 3);
  CHECK(cv2[2].p == 7);
  CHECK(cv2[2].q == 5);

  auto cf14 = cf_expand(QuadIrrational::sqrt_of(14));
  auto cv14 = convergents(cf14, 4);
  CHECK(cv14[3].p == 15);
  CHECK(cv14[3].q == 4);
  CHECK(cv14[3].p * cv14[3].p - 14 * cv14[3].q * cv14[3].q == 1);
}

TEST_CASE("convergents are coprime and index correctly") {
  for (long d : {2, 3, 5, 6, 14, 61, 109, 991}) {
    auto cf = cf_expand(QuadIrrational::sqrt_of(d));
    auto cvs = convergents(cf, 12);
    for (std::size_t i = 0; i < cvs.size(); ++i) {
      CHECK(cvs[i].index == i);
      CHECK(gcd(cvs[i].p, cvs[i].q) == 1);
    }
  }
}

TEST_CASE("convergent residue at the period boundary") {
  // p_{l-1}^2 - d q_{l-1}^2 = (-1)^l
  for (long d = 2; d <= 2000; ++d) {
    if (is_perfect_square(Int(d))) continue;
    auto cf = cf_expand(QuadIrrational::sqrt_of(d));
    std::size_t l = cf.period_length();
    auto cvs = convergents(cf, l);
    Int expected = (l % 2 == 0) ? 1 : -1;
    CHECK(cvs.back().p * cvs.back().p - d * cvs.back().q * cvs.back().q ==
          expected);
  }
}
