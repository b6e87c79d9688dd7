#pragma once

#include "pellcf/integer.hpp"

namespace pellcf {

// Parameters of the generalized Fibonacci / Lucas recurrences
//   f_n = w f_{n-1} + z f_{n-2},   f_0 = 0, f_1 = 1
//   L_n = w L_{n-1} + z L_{n-2},   L_0 = 2, L_1 = w
// with w != 0 and w^2 + 4z >= 0 (real characteristic roots).
struct LucasParams {
  Int w;
  Int z;

  LucasParams(Int w_in, Int z_in);
};

Int fib_gen(const LucasParams& p, unsigned long n);

Int lucas_gen(const LucasParams& p, unsigned long n);

// Exact integer consequence of the Binet closed forms:
//   L_n^2 - (w^2 + 4z) f_n^2 = 4 (-z)^n
bool binet_identity_check(const LucasParams& p, unsigned long n);

}  // namespace pellcf
