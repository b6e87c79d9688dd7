#include "pellcf/forms.hpp"

#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "doctest.h"

using namespace pellcf;

namespace {

// All reduced forms of discriminant disc, by direct enumeration: b runs over
// 0 < b < sqrt(disc) with b = disc (mod 2), and a c = (b^2 - disc)/4 over all
// factorizations.
std::vector<QForm> enumerate_reduced(const Int& disc) {
  std::vector<QForm> out;
  Int s = isqrt(disc);
  for (Int b = 1; b <= s; ++b) {
    if ((disc - b * b) % 4 != 0) continue;
    Int ac = (b * b - disc) / 4;  // negative
    Int limit = abs(ac);
    for (Int a = 1; a * a <= limit; ++a) {
      if (abs(ac) % a != 0) continue;
      Int c = ac / a;
      for (QForm f : {QForm{a, b, c}, QForm{c, b, a}, QForm{-a, b, -c},
                      QForm{-c, b, -a}}) {
        if (is_reduced(f)) out.push_back(f);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("discriminant") {
  CHECK(discriminant({1, 0, -6}) == 24);
  CHECK(discriminant({1, 1, 1}) == -3);
  CHECK(discriminant({0, 1, 0}) == 1);
}

TEST_CASE("is_reduced") {
  CHECK(is_reduced({1, 4, -2}));
  CHECK_FALSE(is_reduced({1, 0, -6}));
  CHECK_FALSE(is_reduced({-6, 0, 1}));
  CHECK(is_reduced({-2, 4, 1}));
  CHECK_THROWS_AS(is_reduced({1, 1, 1}), Error);
  CHECK_THROWS_AS(is_reduced({0, 1, 0}), Error);
}

TEST_CASE("gamma_action") {
  QForm f{1, 0, -6};
  CHECK(gamma_action(Mat2::identity(), f) == f);
  Mat2 g{5, 2, 12, 5};
  CHECK(gamma_action(g, f) == f);
  Mat2 swap{0, 1, 1, 0};
  QForm any{3, 5, -7};
  CHECK(gamma_action(swap, any) == QForm{-7, 5, 3});
  CHECK_THROWS_AS(gamma_action(Mat2{2, 0, 0, 2}, f), Error);
}

TEST_CASE("gamma_action preserves the discriminant") {
  std::mt19937 rng(7);
  auto entry = [&] { return Int(static_cast<long>(rng() % 19) - 9); };
  std::size_t tried = 0;
  while (tried < 500) {
    Mat2 g{entry(), entry(), entry(), entry()};
    Int det = g.det();
    if (det != 1 && det != -1) continue;
    QForm f{entry() * 5, entry() * 5, entry() * 5};
    ++tried;
    CHECK(discriminant(gamma_action(g, f)) == discriminant(f));
  }
}

TEST_CASE("is_automorphism") {
  QForm f{1, 0, -6};
  CHECK(is_automorphism(Mat2::identity(), f) == AutomorphismKind::proper);
  CHECK(is_automorphism(Mat2{5, 2, 12, 5}, f) == AutomorphismKind::proper);
  CHECK(is_automorphism(Mat2{1, 0, 0, -1}, f) == AutomorphismKind::improper);
  CHECK(is_automorphism(Mat2{5, 2, 12, 4}, f) == AutomorphismKind::none);
}

TEST_CASE("tau") {
  CHECK(tau({1, 4, -2}) == QForm{-1, 4, 2});
  QForm f{3, 1, -5};
  CHECK(tau(tau(f)) == f);
  CHECK(tau({0, 1, 0}) == QForm{0, 1, 0});
}

TEST_CASE("rho_step examples") {
  auto [f1, r1] = rho_step({1, 0, -6});
  CHECK(f1 == QForm{-6, 0, 1});
  CHECK(r1 == 0);

  auto [f2, r2] = rho_step({-6, 0, 1});
  CHECK(f2 == QForm{1, 4, -2});
  CHECK(r2 == 2);

  auto [f3, r3] = rho_step({-5, 0, 1});
  CHECK(f3 == QForm{1, 4, -1});
  CHECK(r3 == 2);

  CHECK_THROWS_AS(rho_step({1, 5, 0}), Error);
}

TEST_CASE("rho permutes the reduced forms of a discriminant") {
  for (long d = 2; d <= 300; ++d) {
    if (is_perfect_square(Int(d))) continue;
    auto reduced = enumerate_reduced(4 * Int(d));
    auto key = [](const QForm& f) {
      return std::tuple<std::string, std::string, std::string>(
          dec(f.a), dec(f.b), dec(f.c));
    };
    std::set<std::tuple<std::string, std::string, std::string>> domain, image;
    for (const QForm& f : reduced) {
      domain.insert(key(f));
      QForm g = rho_step(f).form;
      CHECK(is_reduced(g));
      image.insert(key(g));
    }
    CHECK(domain == image);
  }
}

TEST_CASE("reduce examples") {
  Reduction r6 = reduce({1, 0, -6});
  CHECK(r6.form == QForm{1, 4, -2});
  CHECK(r6.trace.size() == 2);

  QForm already{1, 4, -2};
  Reduction r = reduce(already);
  CHECK(r.form == already);
  CHECK(r.trace.empty());

  Reduction r8 = reduce({1, 0, -8});
  CHECK(r8.form == QForm{1, 4, -4});
  CHECK(r8.trace.size() == 2);
}

TEST_CASE("reduction of Pell forms terminates within three steps") {
  for (long d = 2; d <= 3000; ++d) {
    if (is_perfect_square(Int(d))) continue;
    Reduction r = reduce(pell_form(d));
    CHECK(is_reduced(r.form));
    CHECK(r.trace.size() <= 3);
  }
}

TEST_CASE("cycle examples") {
  FormCycle c6 = cycle({1, 4, -2});
  CHECK(c6.length() == 2);
  CHECK(c6.forms == std::vector<QForm>{{1, 4, -2}, {2, 4, -1}});

  FormCycle c8 = cycle({1, 4, -4});
  CHECK(c8.forms == std::vector<QForm>{{1, 4, -4}, {4, 4, -1}});

  FormCycle c3 = cycle({1, 2, -2});
  CHECK(c3.forms == std::vector<QForm>{{1, 2, -2}, {2, 2, -1}});

  CHECK_THROWS_AS(cycle({1, 0, -6}), Error);
}

TEST_CASE("proper cycle examples and parity law") {
  FormCycle p6 = proper_cycle({1, 4, -2});
  CHECK(p6.forms == std::vector<QForm>{{1, 4, -2}, {-2, 4, 1}});

  FormCycle p8 = proper_cycle({1, 4, -4});
  CHECK(p8.forms == std::vector<QForm>{{1, 4, -4}, {-4, 4, 1}});

  for (long d = 2; d <= 500; ++d) {
    if (is_perfect_square(Int(d))) continue;
    QForm f = reduce(pell_form(d)).form;
    std::size_t l = cycle(f).length();
    std::size_t pl = proper_cycle(f).length();
    CHECK(pl == (l % 2 == 1 ? 2 * l : l));
  }
}

TEST_CASE("cycles close and stay reduced") {
  for (long d = 2; d <= 1000; ++d) {
    if (is_perfect_square(Int(d))) continue;
    QForm f = reduce(pell_form(d)).form;
    FormCycle c = cycle(f);
    Int disc = discriminant(f);
    for (const QForm& g : c.forms) {
      CHECK(is_reduced(g));
      CHECK(discriminant(g) == disc);
    }
  }
}

TEST_CASE("cycle step agrees with tau after rho on reduced forms") {
  for (long d = 2; d <= 500; ++d) {
    if (is_perfect_square(Int(d))) continue;
    QForm f = reduce(pell_form(d)).form;
    FormCycle c = cycle(f);
    for (std::size_t j = 0; j < c.length(); ++j) {
      const QForm& cur = c.forms[j];
      const QForm& next = c.forms[(j + 1) % c.length()];
      CHECK(tau(rho_step(cur).form) == next);
    }
  }
}

TEST_CASE("same_cycle is rotation-invariant") {
  FormCycle a = cycle({1, 4, -2});
  FormCycle b = a;
  std::rotate(b.forms.begin(), b.forms.begin() + 1, b.forms.end());
  CHECK(same_cycle(a, b));
  b.forms[0].a += 1;
  CHECK_FALSE(same_cycle(a, b));
}

TEST_CASE("pell_form") {
  CHECK(pell_form(6) == QForm{1, 0, -6});
  CHECK(discriminant(pell_form(6)) == 24);
  CHECK(pell_form(8) == QForm{1, 0, -8});
  CHECK(pell_form(12) == QForm{1, 0, -12});
  CHECK_FALSE(is_reduced(pell_form(12)));
  CHECK_THROWS_AS(pell_form(9), Error);
}
