#include "pellcf/cf.hpp"

#include <string>

namespace pellcf {
namespace {

// floor((P + sqrt(d)) / Q) with s = floor(sqrt(d)), d non-square. Replacing
// sqrt(d) by s is exact for Q > 0: no integer lies in (P + s, P + sqrt(d)].
// For Q < 0 the same interval argument gives floor = -floor((P+s)/|Q|) - 1.
Int quotient_floor(const Int& P, const Int& Q, const Int& s) {
  Int t = P + s;
  if (Q > 0) return floor_div(t, Q);
  return -floor_div(t, -Q) - 1;
}

// x = (P + sqrt(d))/Q is reduced when x > 1 and -1 < conj(x) < 0; from such a
// state the expansion is purely periodic. All comparisons against sqrt(d)
// collapse to integer comparisons with s = floor(sqrt(d)):
// sqrt(d) > t iff t <= s.
bool state_reduced(const Int& P, const Int& Q, const Int& s) {
  if (Q > 0) return Q - P <= s && P <= s && P + Q > s;
  return Q - P > s && P > s && P + Q <= s;
}

}  // namespace

QuadIrrational QuadIrrational::normalized() const {
  if (q0 == 0) fail(ErrorKind::invalid_input, "zero denominator q0");
  if (d < 2 || is_perfect_square(d))
    fail(ErrorKind::square_radicand,
         "radicand " + dec(d) + " is a perfect square (or < 2)");
  QuadIrrational x = *this;
  Int rem = d - p0 * p0;
  if (!mpz_divisible_p(rem.get_mpz_t(), q0.get_mpz_t())) {
    // Rescale (p0 + sqrt(d))/q0 = (p0 f + sqrt(d f^2))/(q0 f) with f = |q0|
    // so that the new denominator divides d' - p0'^2.
    Int f = abs(q0);
    x.p0 *= f;
    x.d *= f * f;
    x.q0 *= f;
  }
  return x;
}

bool CFExpansion::terminal_is_twice_a0() const {
  return !period.empty() && period.back() == 2 * a0();
}

bool CFExpansion::inner_palindrome() const {
  if (period.empty()) return false;
  std::size_t n = period.size() - 1;
  for (std::size_t i = 0; i < n / 2; ++i)
    if (period[i] != period[n - 1 - i]) return false;
  return true;
}

CFExpansion cf_expand(const QuadIrrational& input, std::size_t max_states) {
  QuadIrrational x = input.normalized();
  const Int s = isqrt(x.d);
  Int P = x.p0;
  Int Q = x.q0;

  std::vector<Int> quots;
  std::size_t anchor = 0;
  bool have_anchor = false;
  Int pa, qa;

  // Emit partial quotients until the state (P, Q) returns to the first
  // reduced state. The anchor is forced past index 0 so the head is never
  // empty; for a purely periodic input the block starting at 1 is the same
  // cycle. First recurrence of the anchor state gives the minimal period:
  // a state is determined by the value it represents.
  for (std::size_t k = 0;; ++k) {
    if (have_anchor && k > anchor && P == pa && Q == qa) {
      CFExpansion out;
      out.head.assign(quots.begin(),
                      quots.begin() + static_cast<std::ptrdiff_t>(anchor));
      out.period.assign(quots.begin() + static_cast<std::ptrdiff_t>(anchor),
                        quots.end());
      return out;
    }
    if (!have_anchor && k >= 1 && state_reduced(P, Q, s)) {
      have_anchor = true;
      anchor = k;
      pa = P;
      qa = Q;
    }
    if (k >= max_states)
      fail(ErrorKind::period_limit_exceeded,
           "no period within " + std::to_string(max_states) +
               " states for d=" + dec(x.d));
    Int a = quotient_floor(P, Q, s);
    quots.push_back(a);
    P = a * Q - P;
    Q = exact_div(x.d - P * P, Q);
  }
}

std::size_t period_length(const QuadIrrational& x, std::size_t max_states) {
  return cf_expand(x, max_states).period.size();
}

std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t count) {
  std::vector<Convergent> out;
  out.reserve(count);
  ConvergentStream stream(cf);
  for (std::size_t i = 0; i < count; ++i) out.push_back(stream.next());
  return out;
}

}  // namespace pellcf
