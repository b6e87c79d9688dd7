#include "pellcf/lucas.hpp"

namespace pellcf {

LucasParams::LucasParams(Int w_in, Int z_in) : w(std::move(w_in)), z(std::move(z_in)) {
  if (w == 0) fail(ErrorKind::invalid_input, "Lucas parameter w must be nonzero");
  if (w * w + 4 * z < 0)
    fail(ErrorKind::invalid_input,
         "Lucas parameters need w^2 + 4z >= 0, got w=" + dec(w) + " z=" + dec(z));
}

namespace {

Int recurrence(const LucasParams& p, unsigned long n, Int prev, Int cur) {
  for (unsigned long i = 0; i < n; ++i) {
    Int next = p.w * cur + p.z * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return prev;
}

}  // namespace

Int fib_gen(const LucasParams& p, unsigned long n) {
  return recurrence(p, n, 0, 1);
}

Int lucas_gen(const LucasParams& p, unsigned long n) {
  return recurrence(p, n, 2, p.w);
}

bool binet_identity_check(const LucasParams& p, unsigned long n) {
  Int f = fib_gen(p, n);
  Int lu = lucas_gen(p, n);
  Int disc = p.w * p.w + 4 * p.z;
  Int rhs = 4 * pow_ui(-p.z, n);
  return lu * lu - disc * f * f == rhs;
}

}  // namespace pellcf
