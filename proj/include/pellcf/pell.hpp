#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pellcf/integer.hpp"

namespace pellcf {

struct PellSolution {
  Int x;
  Int y;
  Int d;
  Int n_value;        // the N in x^2 - d y^2 = N
  std::size_t index;  // 1-based position in the solution chain

  bool verifies() const { return x * x - d * y * y == n_value; }

  bool operator==(const PellSolution&) const = default;
};

struct FundamentalPair {
  PellSolution plus_one;
  std::optional<PellSolution> minus_one;  // present iff the period is odd
};

// Least positive solutions of x^2 - d y^2 = 1 and (when solvable) = -1,
// read off the continued fraction of sqrt(d).
FundamentalPair fundamental_pm1(const Int& d);

// First `count` positive solutions of x^2 - d y^2 = n_value, n_value in
// {1, -1}, in increasing order.
std::vector<PellSolution> solutions(const Int& d, int n_value,
                                    std::size_t count);

// Least positive solution of x^2 - d y^2 = 4. Always exists.
PellSolution fundamental_4(const Int& d);

// Least positive solution of x^2 - d y^2 = -4, when one exists.
std::optional<PellSolution> fundamental_neg4(const Int& d);

// First `count` positive solutions of x^2 - d y^2 = n_value, n_value in
// {4, -4}. Generated by z -> z * z1 / 2 with norm filtering.
std::vector<PellSolution> solutions_4(const Int& d, int n_value,
                                      std::size_t count);

// Dispatcher over n_value in {1, -1, 4, -4}.
std::vector<PellSolution> solve(const Int& d, int n_value, std::size_t count);

// (x1 x2 + d y1 y2, x1 y2 + y1 x2): composition of solutions, the group law
// on the norm-form values.
PellSolution compose(const PellSolution& u, const PellSolution& v);

}  // namespace pellcf
