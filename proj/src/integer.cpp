#include "pellcf/integer.hpp"

namespace pellcf {

Int isqrt(const Int& n) {
  if (n < 0) fail(ErrorKind::invalid_input, "isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) fail(ErrorKind::invalid_input, "division by zero");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int exact_div(const Int& a, const Int& b) {
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    fail(ErrorKind::invalid_input, "inexact division: " + dec(a) + " / " + dec(b));
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int pow_ui(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace pellcf
