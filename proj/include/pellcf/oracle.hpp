#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pellcf/integer.hpp"
#include "pellcf/pell.hpp"

namespace pellcf::oracle {

// Exact check of x^2 - d y^2 = n_value. Deliberately self-contained: the
// oracle side never calls into the continued-fraction or solver modules.
bool verify_solution(const Int& d, const Int& n_value, const Int& x,
                     const Int& y);

// All (x, y) with 0 <= y <= y_max, x >= 0 and x^2 = n_value + d y^2,
// ascending in y.
std::vector<PellSolution> brute_pell(const Int& d, const Int& n_value,
                                     const Int& y_max);

// Least entry of brute_pell with y >= 1, if any.
std::optional<PellSolution> brute_fundamental(const Int& d, const Int& n_value,
                                              const Int& y_max);

}  // namespace pellcf::oracle
