#include "pellcf/pell.hpp"

#include <cassert>

#include "pellcf/cf.hpp"

namespace pellcf {
namespace {

void require_nonsquare(const Int& d) {
  if (d < 2 || is_perfect_square(d))
    fail(ErrorKind::square_radicand, "d=" + dec(d) + " is a perfect square (or < 2)");
}

// Convergent p_k/q_k of sqrt(d) at index k.
PellSolution convergent_solution(const CFExpansion& cf, const Int& d,
                                 std::size_t k, int n_value) {
  ConvergentStream stream(cf);
  Convergent c{};
  for (std::size_t i = 0; i <= k; ++i) c = stream.next();
  return {c.p, c.q, d, n_value, 1};
}

// For d = 1 (mod 4) the solutions of x^2 - d y^2 = +-4 correspond to the
// units of the order generated by (1 + sqrt(d))/2. Scanning two periods of
// that expansion finds the fundamental +-4 values: with convergents A_k/B_k
// of (1 + sqrt(d))/2, the pair (2 A_k - B_k, B_k) runs through them.
struct HalfIntegerScan {
  std::optional<PellSolution> plus4;
  std::optional<PellSolution> minus4;
};

HalfIntegerScan scan_half_integer_units(const Int& d) {
  CFExpansion cf = cf_expand(QuadIrrational::half_integer(d));
  HalfIntegerScan found;
  ConvergentStream stream(cf);
  std::size_t limit = 2 * cf.period_length() + 1;
  for (std::size_t k = 0; k < limit; ++k) {
    Convergent c = stream.next();
    Int g = 2 * c.p - c.q;
    Int norm = g * g - d * c.q * c.q;
    if (norm == 4 && !found.plus4)
      found.plus4 = PellSolution{g, c.q, d, 4, 1};
    else if (norm == -4 && !found.minus4)
      found.minus4 = PellSolution{g, c.q, d, -4, 1};
    if (found.plus4 && found.minus4) break;
  }
  assert(found.plus4.has_value());
  return found;
}

// (x, y) -> (x x1 + d y y1, x y1 + y x1) / 2, exact for norm +-4 chains.
PellSolution half_compose(const PellSolution& z, const PellSolution& w) {
  Int x = exact_div(z.x * w.x + z.d * z.y * w.y, 2);
  Int y = exact_div(z.x * w.y + z.y * w.x, 2);
  Int n = exact_div(z.n_value * w.n_value, 4);
  return {x, y, z.d, n, z.index + 1};
}

}  // namespace

PellSolution compose(const PellSolution& u, const PellSolution& v) {
  return {u.x * v.x + u.d * u.y * v.y, u.x * v.y + u.y * v.x, u.d,
          u.n_value * v.n_value, u.index + 1};
}

FundamentalPair fundamental_pm1(const Int& d) {
  require_nonsquare(d);
  CFExpansion cf = cf_expand(QuadIrrational::sqrt_of(d));
  std::size_t l = cf.period_length();
  FundamentalPair pair;
  if (l % 2 == 0) {
    pair.plus_one = convergent_solution(cf, d, l - 1, 1);
  } else {
    pair.plus_one = convergent_solution(cf, d, 2 * l - 1, 1);
    pair.minus_one = convergent_solution(cf, d, l - 1, -1);
  }
  assert(pair.plus_one.verifies());
  assert(!pair.minus_one || pair.minus_one->verifies());
  return pair;
}

std::vector<PellSolution> solutions(const Int& d, int n_value,
                                    std::size_t count) {
  if (n_value != 1 && n_value != -1)
    fail(ErrorKind::invalid_input, "n_value must be 1 or -1");
  std::vector<PellSolution> out;
  if (count == 0) return out;
  FundamentalPair pair = fundamental_pm1(d);
  out.reserve(count);
  if (n_value == 1) {
    PellSolution z = pair.plus_one;
    for (std::size_t i = 0; i < count; ++i) {
      z.index = i + 1;
      out.push_back(z);
      z = compose(z, pair.plus_one);
    }
    return out;
  }
  if (!pair.minus_one)
    fail(ErrorKind::no_solution,
         "x^2 - " + dec(d) + " y^2 = -1 has no solution (even period)");
  // Odd powers of the -1 fundamental; one step multiplies by its square,
  // which is the +1 fundamental.
  PellSolution z = *pair.minus_one;
  for (std::size_t i = 0; i < count; ++i) {
    z.index = i + 1;
    out.push_back(z);
    z = compose(z, pair.plus_one);
  }
  return out;
}

PellSolution fundamental_4(const Int& d) {
  require_nonsquare(d);
  unsigned long residue = mpz_class(d % 4).get_ui();
  switch (residue) {
    case 0: {
      // x is forced even; x = 2u turns the equation into u^2 - (d/4) y^2 = 1.
      PellSolution f = fundamental_pm1(d / 4).plus_one;
      return {2 * f.x, f.y, d, 4, 1};
    }
    case 2:
    case 3: {
      // x and y are forced even; (2x1, 2y1) doubles the = 1 fundamental.
      PellSolution f = fundamental_pm1(d).plus_one;
      return {2 * f.x, 2 * f.y, d, 4, 1};
    }
    default:
      return *scan_half_integer_units(d).plus4;
  }
}

std::optional<PellSolution> fundamental_neg4(const Int& d) {
  require_nonsquare(d);
  unsigned long residue = mpz_class(d % 4).get_ui();
  switch (residue) {
    case 0: {
      auto minus = fundamental_pm1(d / 4).minus_one;
      if (!minus) return std::nullopt;
      return PellSolution{2 * minus->x, minus->y, d, -4, 1};
    }
    case 2:
    case 3: {
      auto minus = fundamental_pm1(d).minus_one;
      if (!minus) return std::nullopt;
      return PellSolution{2 * minus->x, 2 * minus->y, d, -4, 1};
    }
    default:
      return scan_half_integer_units(d).minus4;
  }
}

std::vector<PellSolution> solutions_4(const Int& d, int n_value,
                                      std::size_t count) {
  if (n_value != 4 && n_value != -4)
    fail(ErrorKind::invalid_input, "n_value must be 4 or -4");
  std::vector<PellSolution> out;
  out.reserve(count);
  if (count == 0) return out;
  PellSolution z1 = [&] {
    if (n_value == 4) return fundamental_4(d);
    auto f = fundamental_neg4(d);
    if (!f)
      fail(ErrorKind::no_solution,
           "x^2 - " + dec(d) + " y^2 = -4 has no solution");
    return *f;
  }();
  // z -> z z1 / 2 keeps norm 4 invariant; from a norm -4 seed the norms
  // alternate -4, 4, -4, ... and only matching steps are kept.
  PellSolution z = z1;
  z.index = 1;
  out.push_back(z);
  while (out.size() < count) {
    z = half_compose(z, z1);
    if (z.n_value == n_value) {
      z.index = out.size() + 1;
      out.push_back(z);
    }
  }
  return out;
}

std::vector<PellSolution> solve(const Int& d, int n_value, std::size_t count) {
  switch (n_value) {
    case 1:
    case -1:
      return solutions(d, n_value, count);
    case 4:
    case -4:
      return solutions_4(d, n_value, count);
    default:
      fail(ErrorKind::invalid_input, "N must be one of 1, -1, 4, -4");
  }
}

}  // namespace pellcf
