#include "pellcf/forms.hpp"

#include <string>

namespace pellcf {
namespace {

Int require_indefinite(const QForm& f) {
  Int disc = discriminant(f);
  if (disc <= 0 || is_perfect_square(disc))
    fail(ErrorKind::not_indefinite,
         "discriminant " + dec(disc) + " is not positive and non-square");
  return disc;
}

std::string show(const QForm& f) {
  return "(" + dec(f.a) + ", " + dec(f.b) + ", " + dec(f.c) + ")";
}

}  // namespace

Int discriminant(const QForm& f) { return f.b * f.b - 4 * f.a * f.c; }

bool is_reduced(const QForm& f) {
  Int disc = require_indefinite(f);
  if (f.b <= 0) return false;
  if (f.b * f.b >= disc) return false;
  // |sqrt(D) - 2|a|| < b splits into 2|a| - b < sqrt(D) and 2|a| + b > sqrt(D),
  // decided by squaring (D non-square, so no ties).
  Int twoa = 2 * abs(f.a);
  Int lo = twoa - f.b;
  if (lo > 0 && lo * lo >= disc) return false;
  Int hi = twoa + f.b;
  return hi * hi > disc;
}

QForm tau(const QForm& f) { return {-f.a, f.b, -f.c}; }

QForm gamma_action(const Mat2& g, const QForm& f) {
  Int det = g.det();
  if (det != 1 && det != -1)
    fail(ErrorKind::not_unimodular, "matrix determinant " + dec(det));
  const Int &r = g.m11, &s = g.m12, &t = g.m21, &u = g.m22;
  Int a = f.a * r * r + f.b * r * s + f.c * s * s;
  Int b = 2 * f.a * r * t + f.b * r * u + f.b * t * s + 2 * f.c * s * u;
  Int c = f.a * t * t + f.b * t * u + f.c * u * u;
  return {a, b, c};
}

AutomorphismKind is_automorphism(const Mat2& g, const QForm& f) {
  Int det = g.det();
  if (det != 1 && det != -1) return AutomorphismKind::none;
  if (gamma_action(g, f) != f) return AutomorphismKind::none;
  return det == 1 ? AutomorphismKind::proper : AutomorphismKind::improper;
}

RhoStep rho_step(const QForm& f) {
  Int disc = require_indefinite(f);
  if (f.c == 0)
    fail(ErrorKind::zero_outer_coefficient, "rho step needs c != 0");
  Int abs_c = abs(f.c);
  Int sign_c = f.c > 0 ? 1 : -1;
  Int r;
  if (abs_c * abs_c >= disc) {
    r = sign_c * floor_div(f.b, 2 * abs_c);
  } else {
    r = sign_c * floor_div(f.b + isqrt(disc), 2 * abs_c);
  }
  QForm next{f.c, -f.b + 2 * f.c * r, f.c * r * r - f.b * r + f.a};
  return {next, r};
}

Reduction reduce(const QForm& f) {
  require_indefinite(f);
  Reduction out{f, {}};
  // Standard bound: reduction reaches a reduced form in O(log) steps; the
  // guard only trips on a logic error.
  for (int guard = 0; guard < 10000; ++guard) {
    if (is_reduced(out.form)) return out;
    RhoStep step = rho_step(out.form);
    out.trace.push_back(step);
    out.form = step.form;
  }
  fail(ErrorKind::period_limit_exceeded, "reduction did not terminate");
}

FormCycle cycle(const QForm& f) {
  if (!is_reduced(f))
    fail(ErrorKind::not_reduced, "cycle needs a reduced form, got " + show(f));
  if (f.a < 0)
    fail(ErrorKind::not_reduced,
         "cycle starts from the representative with a > 0; apply tau to " +
             show(f));
  Int disc = discriminant(f);
  Int sqrt_disc = isqrt(disc);
  FormCycle out;
  out.proper = false;
  out.forms.push_back(f);
  QForm g = f;
  constexpr std::size_t max_cycle = 10'000'000;
  for (std::size_t guard = 0;; ++guard) {
    if (guard > max_cycle)
      fail(ErrorKind::period_limit_exceeded, "cycle did not close");
    Int abs_c = abs(g.c);
    Int s = floor_div(g.b + sqrt_disc, 2 * abs_c);
    QForm next{abs_c, -g.b + 2 * abs_c * s, -(g.c * s * s + g.b * s + g.a)};
    if (next == f) return out;
    out.forms.push_back(next);
    g = next;
  }
}

FormCycle proper_cycle(const QForm& f) {
  FormCycle base = cycle(f);
  std::size_t l = base.length();
  std::size_t total = (l % 2 == 1) ? 2 * l : l;
  FormCycle out;
  out.proper = true;
  out.forms.reserve(total);
  for (std::size_t j = 0; j < total; ++j) {
    const QForm& g = base.forms[j % l];
    out.forms.push_back(j % 2 == 0 ? g : tau(g));
  }
  return out;
}

bool same_cycle(const FormCycle& lhs, const FormCycle& rhs) {
  std::size_t n = lhs.length();
  if (n != rhs.length()) return false;
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i)
      match = lhs.forms[i] == rhs.forms[(i + shift) % n];
    if (match) return true;
  }
  return false;
}

QForm pell_form(const Int& d) {
  if (d < 2 || is_perfect_square(d))
    fail(ErrorKind::square_radicand, "d=" + dec(d) + " is a perfect square (or < 2)");
  return {1, 0, -d};
}

}  // namespace pellcf
