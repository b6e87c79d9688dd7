#pragma once

#include <cstddef>
#include <vector>

#include "pellcf/integer.hpp"
#include "pellcf/mat2.hpp"

namespace pellcf {

// Integral binary quadratic form a x^2 + b x y + c y^2, written (a, b, c).
struct QForm {
  Int a;
  Int b;
  Int c;

  bool operator==(const QForm&) const = default;
};

Int discriminant(const QForm& f);

// Reduced test for indefinite forms: |sqrt(D) - 2|a|| < b < sqrt(D),
// evaluated with exact squared comparisons. Requires D > 0 and non-square.
bool is_reduced(const QForm& f);

// (a, b, c) -> (-a, b, -c).
QForm tau(const QForm& f);

// Substitution action of a unimodular g = (r s; t u):
//   (a r^2 + b r s + c s^2,  2 a r t + b r u + b t s + 2 c s u,
//    a t^2 + b t u + c u^2)
QForm gamma_action(const Mat2& g, const QForm& f);

enum class AutomorphismKind { proper, improper, none };

AutomorphismKind is_automorphism(const Mat2& g, const QForm& f);

struct RhoStep {
  QForm form;  // form after the step
  Int r;       // reducing number used
};

// One normalization-reduction step
//   rho(a, b, c) = (c, -b + 2 c r, c r^2 - b r + a)
// with r = sign(c) floor(b / 2|c|) when c^2 >= D, else
//      r = sign(c) floor((b + sqrt(D)) / 2|c|).
RhoStep rho_step(const QForm& f);

struct Reduction {
  QForm form;                  // first reduced form reached
  std::vector<RhoStep> trace;  // every rho step taken
};

Reduction reduce(const QForm& f);

struct FormCycle {
  std::vector<QForm> forms;
  bool proper = false;

  std::size_t length() const { return forms.size(); }

  bool operator==(const FormCycle&) const = default;
};

// Orbit of a reduced form F0 with a > 0 under the step
//   s = floor((b + sqrt(D)) / 2|c|)
//   (a, b, c) -> (|c|, -b + 2|c| s, -(c s^2 + b s + a))
// stopping when F0 recurs.
FormCycle cycle(const QForm& f);

// Same orbit with tau applied at odd positions; length 2l when the plain
// cycle length l is odd, l when it is even.
FormCycle proper_cycle(const QForm& f);

// Equality of cycles up to the starting point.
bool same_cycle(const FormCycle& lhs, const FormCycle& rhs);

// The Pell form (1, 0, -d) of discriminant 4d.
QForm pell_form(const Int& d);

}  // namespace pellcf
