#pragma once

#include <gmpxx.h>

#include <string>

#include "pellcf/errors.hpp"

namespace pellcf {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// signed integer; "natural" values use the same type with non-negativity
// enforced at the API boundary.
using Int = mpz_class;

// Floor of the square root. Requires n >= 0.
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n);

// Floor division (rounds toward negative infinity). Requires b != 0.
Int floor_div(const Int& a, const Int& b);

// Quotient a / b when b is known to divide a exactly.
Int exact_div(const Int& a, const Int& b);

Int binomial(unsigned long n, unsigned long k);

Int pow_ui(const Int& base, unsigned long e);

inline std::string dec(const Int& v) { return v.get_str(10); }

}  // namespace pellcf
