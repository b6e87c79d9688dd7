#pragma once

#include <cstddef>
#include <vector>

#include "pellcf/integer.hpp"

namespace pellcf {

inline constexpr std::size_t kDefaultMaxStates = 10'000'000;

// A quadratic irrational (p0 + sqrt(d)) / q0 with d a non-square natural.
// The integer step recurrence needs q0 | d - p0^2; inputs that violate it
// are rescaled by normalized() without changing the value.
struct QuadIrrational {
  Int d;
  Int p0;
  Int q0;

  static QuadIrrational sqrt_of(const Int& d) { return {d, 0, 1}; }

  // (1 + sqrt(d)) / 2, the ambient order generator for d = 1 (mod 4).
  static QuadIrrational half_integer(const Int& d) { return {d, 1, 2}; }

  QuadIrrational normalized() const;
};

// Periodic continued fraction [head...; period repeating]. For sqrt(d) the
// head is the single integer part a0; general inputs may carry a longer
// non-repeating prefix. The period is always the minimal repeating block and
// every entry in it is >= 1.
struct CFExpansion {
  std::vector<Int> head;
  std::vector<Int> period;

  const Int& a0() const { return head.front(); }
  std::size_t period_length() const { return period.size(); }

  // True when the last period entry is 2*a0 (sqrt(d) expansions).
  bool terminal_is_twice_a0() const;
  // True when the period with its last entry removed reads the same in both
  // directions (sqrt(d) expansions).
  bool inner_palindrome() const;

  bool operator==(const CFExpansion&) const = default;
};

struct Convergent {
  Int p;
  Int q;
  std::size_t index;  // p_k / q_k with k = index, starting at 0

  bool operator==(const Convergent&) const = default;
};

CFExpansion cf_expand(const QuadIrrational& x,
                      std::size_t max_states = kDefaultMaxStates);

std::size_t period_length(const QuadIrrational& x,
                          std::size_t max_states = kDefaultMaxStates);

std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t count);

// Streams partial quotients: head first, then the period forever.
class PartialQuotients {
 public:
  explicit PartialQuotients(const CFExpansion& cf) : cf_(&cf) {}

  const Int& next() {
    if (i_ < cf_->head.size()) return cf_->head[i_++];
    const Int& q = cf_->period[(i_ - cf_->head.size()) % cf_->period.size()];
    ++i_;
    return q;
  }

 private:
  const CFExpansion* cf_;
  std::size_t i_ = 0;
};

// Incremental convergent recurrence p_k = a_k p_{k-1} + p_{k-2} (and q alike)
// seeded with p_{-2} = 0, p_{-1} = 1, q_{-2} = 1, q_{-1} = 0.
class ConvergentStream {
 public:
  explicit ConvergentStream(const CFExpansion& cf) : quots_(cf) {}

  Convergent next() {
    const Int& a = quots_.next();
    Int p = a * p1_ + p2_;
    Int q = a * q1_ + q2_;
    p2_ = p1_;
    q2_ = q1_;
    p1_ = p;
    q1_ = q;
    return {p, q, index_++};
  }

 private:
  PartialQuotients quots_;
  Int p2_ = 0, p1_ = 1;
  Int q2_ = 1, q1_ = 0;
  std::size_t index_ = 0;
};

}  // namespace pellcf
