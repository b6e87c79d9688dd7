#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pellcf/cf.hpp"
#include "pellcf/forms.hpp"
#include "pellcf/integer.hpp"
#include "pellcf/mat2.hpp"
#include "pellcf/pell.hpp"

namespace pellcf {

enum class Sign { plus, minus };

inline const char* to_string(Sign s) { return s == Sign::plus ? "+" : "-"; }

// A closed-form rule that disagrees with exact computation at the call's
// parameters. `rule` is a stable identifier, `detail` a human sentence with
// the claimed and computed values.
struct Deviation {
  std::string rule;
  std::string detail;
};

using DeviationLog = std::vector<Deviation>;

void log_deviation(DeviationLog* log, std::string rule, std::string detail);

// Validated parameter bundle for the discriminant family
//   d = a^(2k) b^(2l) + i c^m   (sign = plus)
//   d = a^(2k) b^(2l) - i c^m   (sign = minus)
// with i in {1, 2}, k >= m >= 1, l >= m, c | ab. The quotient
// h = a^k b^l / c^m is then an exact natural number.
struct SpecialD {
  Int a, b, c;
  unsigned long k, l, m;
  int i;
  Sign sign;

  // derived
  Int akbl;  // a^k b^l
  Int cm;    // c^m
  Int h;     // akbl / cm
  Int d;
};

SpecialD build_special(const Int& a, const Int& b, const Int& c,
                       unsigned long k, unsigned long l, unsigned long m,
                       int i, Sign sign);

enum class Squarefree { yes, no, unknown };

// Advisory square-free classification by trial division up to `bound`.
Squarefree squarefree_advisory(const Int& d, unsigned long bound = 1'000'000);

const char* to_string(Squarefree s);

// ---- closed-form predictions, each validated against the generic engine ----

// Predicted continued fraction of sqrt(d), canonically collapsed (interior
// zero quotients spliced, repeating block minimized).
CFExpansion predicted_cf(const SpecialD& sd, DeviationLog* log = nullptr);

// Closed-form fundamental solution of x^2 - d y^2 = 1.
PellSolution fundamental_special(const SpecialD& sd, DeviationLog* log = nullptr);

// Solvability of x^2 - d y^2 = -1 over the family, with the true fundamental
// when solvable.
std::optional<PellSolution> neg1_status(const SpecialD& sd,
                                        DeviationLog* log = nullptr);

// Fundamental solution of x^2 - d y^2 = 4; the closed-form doubling rule
// where it is valid, the generic solver where it is not.
PellSolution fundamental_4_special(const SpecialD& sd,
                                   DeviationLog* log = nullptr);

// Solvability of x^2 - d y^2 = -4 over the family.
std::optional<PellSolution> neg4_status(const SpecialD& sd,
                                        DeviationLog* log = nullptr);

// Chain step (x, y) -> (x1 x + y1 d y, y1 x + x1 y).
PellSolution next_solution_linear(const SpecialD& sd, const PellSolution& prev);

// Order-3 recurrence x_n = (2 x1 - 1)(x_{n-1} + x_{n-2}) - x_{n-3} applied to
// three consecutive chain solutions.
PellSolution next_solution_order3(const SpecialD& sd, const PellSolution& s1,
                                  const PellSolution& s2,
                                  const PellSolution& s3);

// N = 1 chain via the Lucas closed form
//   x_n = L_n(2 x1, -1) / 2,   y_n = y1 f_n(2 x1, -1).
std::vector<PellSolution> solutions_lucas_1(const SpecialD& sd,
                                            std::size_t count);

// N = 4 chain via
//   x_n = L_n(2 x1, -1),   y_n = 2 y1 f_n(2 x1, -1)
// seeded by the doubled N = 1 fundamental. Falls back to the generic solver
// (with a deviation note) where the doubled seed is not fundamental.
std::vector<PellSolution> solutions_lucas_4(const SpecialD& sd,
                                            std::size_t count,
                                            DeviationLog* log = nullptr);

// M = (x1, y1 d; y1, x1), determinant 1.
Mat2 pell_matrix(const SpecialD& sd);

// M^n through the binomial expansion sums (even / odd branches); equals the
// iterated product.
Mat2 matrix_power_closed(const SpecialD& sd, unsigned long n);

// (M^n)(1, 0)^T read as (x_n, y_n).
PellSolution nth_solution_via_matrix(const SpecialD& sd, unsigned long n);

// Single-base subfamilies d = a^(2k) + a^m, d = a^(2k) + 2 a^m and
// d = a^(2k) - a^k.
enum class PowerVariant { d1_plus, d2_plus, d3 };

CFExpansion power_form_cf(const Int& a, unsigned long k, unsigned long m,
                          PowerVariant variant);

PellSolution fundamental_power_form(const Int& a, unsigned long k,
                                    unsigned long m, PowerVariant variant,
                                    DeviationLog* log = nullptr);

// ---- closed forms for the Pell form (1, 0, -d) of the family ----

// The reduced form reached from (1, 0, -d) after two rho steps.
QForm predicted_reduction(const SpecialD& sd, DeviationLog* log = nullptr);

// Closed-form cycle (proper = false) or proper cycle (proper = true) of the
// predicted reduction. Throws pattern_inapplicable at degenerate h where the
// printed sequences break down; the generic cycle() always applies.
FormCycle predicted_cycle(const SpecialD& sd, bool proper,
                          DeviationLog* log = nullptr);

// g = (x1, y1; y1 d, x1): the determinant-1 generator fixing the Pell form
// under the substitution action. Its transpose is pell_matrix(sd), whose
// powers carry the solution chain in the first column.
Mat2 automorphism_generator(const SpecialD& sd);

// ---- validation grid ----

struct GridFilter {
  std::optional<Sign> sign;  // restrict to one sign
  std::optional<int> family; // restrict to i = 1 or i = 2
};

// Enumerates every valid SpecialD with a, b, c in [1, abc_max] and
// k, l, m in [1, exp_max], in lexicographic (a, b, c, k, l, m, i, sign)
// order. Returns the number of points visited.
std::size_t for_each_grid_point(unsigned long abc_max, unsigned long exp_max,
                                const GridFilter& filter,
                                const std::function<void(const SpecialD&)>& fn);

}  // namespace pellcf
