// pellcf: command-line surface for exact Pell-equation computation.
//
// Verbs: cf, solve, special, form, verify, brute, errata. Structured output
// with --json serializes every integer as a decimal string; field order is
// fixed, so identical invocations produce byte-identical records.
//
// Exit codes: 0 success, 2 invalid input, 3 no solution exists,
// 4 internal cross-check failure.

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pellcf/cf.hpp"
#include "pellcf/forms.hpp"
#include "pellcf/lucas.hpp"
#include "pellcf/oracle.hpp"
#include "pellcf/pell.hpp"
#include "pellcf/special.hpp"

using nlohmann::ordered_json;
using namespace pellcf;

namespace {

struct GlobalOpts {
  bool json = false;
  bool timing = false;
  std::size_t max_period = kDefaultMaxStates;
  std::string y_max = "10000";
};

Int parse_int(const std::string& s, const std::string& what) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::invalid_input, what + ": not an integer: '" + s + "'");
  }
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::no_solution: return 3;
    case ErrorKind::cross_check_failure: return 4;
    default: return 2;
  }
}

ordered_json sol_json(const PellSolution& s) {
  return {{"x", dec(s.x)}, {"y", dec(s.y)}, {"index", s.index}};
}

ordered_json cf_json(const CFExpansion& cf) {
  ordered_json head = ordered_json::array();
  for (const Int& a : cf.head) head.push_back(dec(a));
  ordered_json period = ordered_json::array();
  for (const Int& a : cf.period) period.push_back(dec(a));
  return {{"a0", dec(cf.a0())},
          {"head", std::move(head)},
          {"period", std::move(period)},
          {"period_length", cf.period_length()}};
}

ordered_json form_json(const QForm& f) {
  return {{"a", dec(f.a)}, {"b", dec(f.b)}, {"c", dec(f.c)}};
}

ordered_json mat_json(const Mat2& m) {
  return {{"m11", dec(m.m11)},
          {"m12", dec(m.m12)},
          {"m21", dec(m.m21)},
          {"m22", dec(m.m22)}};
}

ordered_json deviations_json(const DeviationLog& log) {
  ordered_json arr = ordered_json::array();
  for (const Deviation& d : log)
    arr.push_back({{"rule", d.rule}, {"detail", d.detail}});
  return arr;
}

// Every solution the tool prints must re-verify against the oracle first; a
// failure is a hard error, never silent output.
void oracle_gate(const PellSolution& s) {
  if (!oracle::verify_solution(s.d, s.n_value, s.x, s.y))
    fail(ErrorKind::cross_check_failure,
         "solution (" + dec(s.x) + ", " + dec(s.y) + ") failed re-verification "
         "for x^2 - " + dec(s.d) + " y^2 = " + dec(s.n_value));
}

// ---------------------------------------------------------------- rendering

void render_human(const ordered_json& v, std::ostream& os, int indent);

bool is_scalar_array(const ordered_json& v) {
  for (const auto& e : v)
    if (e.is_object() || e.is_array()) return false;
  return true;
}

std::string scalar_str(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_human(const ordered_json& v, std::ostream& os, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (v.is_object()) {
    for (const auto& [key, val] : v.items()) {
      if (val.is_object() || (val.is_array() && !is_scalar_array(val))) {
        os << pad << key << ":\n";
        render_human(val, os, indent + 1);
      } else if (val.is_array()) {
        os << pad << key << ": [";
        bool first = true;
        for (const auto& e : val) {
          if (!first) os << ", ";
          os << scalar_str(e);
          first = false;
        }
        os << "]\n";
      } else {
        os << pad << key << ": " << scalar_str(val) << "\n";
      }
    }
  } else if (v.is_array()) {
    std::size_t i = 0;
    for (const auto& e : v) {
      os << pad << "- [" << i++ << "]\n";
      render_human(e, os, indent + 1);
    }
  } else {
    os << pad << scalar_str(v) << "\n";
  }
}

void emit(const ordered_json& record, const GlobalOpts& g, std::ostream& os) {
  if (g.json)
    os << record.dump() << "\n";
  else
    render_human(record, os, 0);
}

// ------------------------------------------------------------------- verbs

struct CfArgs {
  std::string d;
  std::string p0 = "0";
  std::string q0 = "1";
  std::size_t convergent_count = 0;
};

ordered_json run_cf(const CfArgs& a, const GlobalOpts& g) {
  Int d = parse_int(a.d, "d");
  Int p0 = parse_int(a.p0, "p0");
  Int q0 = parse_int(a.q0, "q0");
  ordered_json rec{{"command", "cf"},
                   {"inputs", {{"d", dec(d)}, {"p0", dec(p0)}, {"q0", dec(q0)}}}};
  CFExpansion cf = cf_expand({d, p0, q0}, g.max_period);
  ordered_json results = cf_json(cf);
  if (p0 == 0 && q0 == 1) {
    results["terminal_is_twice_a0"] = cf.terminal_is_twice_a0();
    results["inner_palindrome"] = cf.inner_palindrome();
  }
  if (a.convergent_count > 0) {
    ordered_json cvs = ordered_json::array();
    for (const Convergent& c : convergents(cf, a.convergent_count))
      cvs.push_back({{"p", dec(c.p)}, {"q", dec(c.q)}, {"index", c.index}});
    results["convergents"] = std::move(cvs);
  }
  rec["results"] = std::move(results);
  rec["deviation_flags"] = ordered_json::array();
  return rec;
}

struct SolveArgs {
  std::string d;
  std::string n;
  std::size_t count = 1;
};

ordered_json run_solve(const SolveArgs& a, const GlobalOpts&) {
  Int d = parse_int(a.d, "d");
  Int n = parse_int(a.n, "N");
  if (n != 1 && n != -1 && n != 4 && n != -4)
    fail(ErrorKind::invalid_input, "N must be one of 1, -1, 4, -4");
  ordered_json rec{{"command", "solve"},
                   {"inputs",
                    {{"d", dec(d)}, {"n", dec(n)}, {"count", a.count}}}};
  std::vector<PellSolution> sols =
      solve(d, static_cast<int>(n.get_si()), a.count);
  ordered_json arr = ordered_json::array();
  for (const PellSolution& s : sols) {
    oracle_gate(s);
    arr.push_back(sol_json(s));
  }
  rec["results"] = {{"solutions", std::move(arr)}};
  rec["deviation_flags"] = ordered_json::array();
  return rec;
}

struct SpecialArgs {
  std::vector<std::string> params;  // a b c k l m i sign
  std::string show = "all";
  std::size_t count = 3;
};

Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return Sign::plus;
  if (s == "-" || s == "minus") return Sign::minus;
  fail(ErrorKind::invalid_input, "sign must be + or -");
}

unsigned long parse_exp(const std::string& s, const std::string& what) {
  Int v = parse_int(s, what);
  if (v < 1 || !v.fits_ulong_p())
    fail(ErrorKind::invalid_input, what + " must be a small positive integer");
  return v.get_ui();
}

ordered_json run_special(const SpecialArgs& a, const GlobalOpts& g) {
  Int pa = parse_int(a.params[0], "a");
  Int pb = parse_int(a.params[1], "b");
  Int pc = parse_int(a.params[2], "c");
  unsigned long k = parse_exp(a.params[3], "k");
  unsigned long l = parse_exp(a.params[4], "l");
  unsigned long m = parse_exp(a.params[5], "m");
  Int fi = parse_int(a.params[6], "i");
  if (fi != 1 && fi != 2) fail(ErrorKind::invalid_input, "i must be 1 or 2");
  Sign sign = parse_sign(a.params[7]);

  ordered_json rec{{"command", "special"},
                   {"inputs",
                    {{"a", dec(pa)},
                     {"b", dec(pb)},
                     {"c", dec(pc)},
                     {"k", k},
                     {"l", l},
                     {"m", m},
                     {"i", static_cast<int>(fi.get_si())},
                     {"sign", to_string(sign)},
                     {"show", a.show},
                     {"count", a.count}}}};

  SpecialD sd =
      build_special(pa, pb, pc, k, l, m, static_cast<int>(fi.get_si()), sign);
  DeviationLog dev;
  ordered_json results{
      {"family",
       {{"d", dec(sd.d)},
        {"h", dec(sd.h)},
        {"akbl", dec(sd.akbl)},
        {"cm", dec(sd.cm)},
        {"squarefree", to_string(squarefree_advisory(sd.d))}}}};

  bool all = a.show == "all";
  if (all || a.show == "cf") {
    ordered_json sec;
    CFExpansion computed = cf_expand(QuadIrrational::sqrt_of(sd.d), g.max_period);
    try {
      CFExpansion predicted = predicted_cf(sd, &dev);
      sec["predicted"] = cf_json(predicted);
      sec["computed"] = cf_json(computed);
      sec["cross_check"] = predicted == computed ? "match" : "mismatch";
      if (predicted != computed)
        fail(ErrorKind::cross_check_failure,
             "predicted continued fraction disagrees with the exact expansion");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::pattern_inapplicable) throw;
      sec["predicted"] = "inapplicable";
      sec["computed"] = cf_json(computed);
      sec["cross_check"] = "not_applicable";
    }
    results["cf"] = std::move(sec);
  }
  if (all || a.show == "fundamental") {
    ordered_json sec;
    PellSolution f = fundamental_special(sd, &dev);
    oracle_gate(f);
    FundamentalPair generic = fundamental_pm1(sd.d);
    sec["closed_form"] = sol_json(f);
    sec["generic"] = sol_json(generic.plus_one);
    sec["cross_check"] =
        (f.x == generic.plus_one.x && f.y == generic.plus_one.y) ? "match"
                                                                 : "mismatch";
    if (sec["cross_check"] != "match")
      fail(ErrorKind::cross_check_failure,
           "closed-form fundamental disagrees with the generic solver");
    auto neg1 = neg1_status(sd, &dev);
    sec["neg1"] = neg1 ? sol_json(*neg1) : ordered_json("absent");
    PellSolution f4 = fundamental_4_special(sd, &dev);
    oracle_gate(f4);
    sec["four"] = sol_json(f4);
    auto neg4 = neg4_status(sd, &dev);
    sec["neg4"] = neg4 ? sol_json(*neg4) : ordered_json("absent");
    if (neg1) oracle_gate(*neg1);
    if (neg4) oracle_gate(*neg4);
    results["fundamental"] = std::move(sec);
  }
  if (all || a.show == "lucas") {
    ordered_json sec;
    std::vector<PellSolution> chain1 = solutions_lucas_1(sd, a.count);
    std::vector<PellSolution> generic1 = solutions(sd.d, 1, a.count);
    ordered_json arr1 = ordered_json::array();
    bool match1 = true;
    for (std::size_t i = 0; i < chain1.size(); ++i) {
      oracle_gate(chain1[i]);
      match1 = match1 && chain1[i].x == generic1[i].x &&
               chain1[i].y == generic1[i].y;
      arr1.push_back(sol_json(chain1[i]));
    }
    sec["chain_1"] = std::move(arr1);
    sec["chain_1_cross_check"] = match1 ? "match" : "mismatch";
    if (!match1)
      fail(ErrorKind::cross_check_failure,
           "Lucas-form N=1 chain disagrees with the generic chain");
    std::vector<PellSolution> chain4 = solutions_lucas_4(sd, a.count, &dev);
    ordered_json arr4 = ordered_json::array();
    for (const PellSolution& s : chain4) {
      oracle_gate(s);
      arr4.push_back(sol_json(s));
    }
    sec["chain_4"] = std::move(arr4);
    results["lucas"] = std::move(sec);
  }
  if (all || a.show == "matrix") {
    ordered_json sec;
    Mat2 mat = pell_matrix(sd);
    sec["pell_matrix"] = mat_json(mat);
    sec["det"] = dec(mat.det());
    Mat2 gen = automorphism_generator(sd);
    sec["generator"] = mat_json(gen);
    sec["fixes_pell_form"] =
        is_automorphism(gen, pell_form(sd.d)) == AutomorphismKind::proper;
    unsigned long n = a.count == 0 ? 1 : static_cast<unsigned long>(a.count);
    Mat2 closed = matrix_power_closed(sd, n);
    Mat2 iterated = Mat2::identity();
    for (unsigned long j = 0; j < n; ++j) iterated = iterated * mat;
    sec["power"] = mat_json(closed);
    sec["power_cross_check"] = closed == iterated ? "match" : "mismatch";
    if (closed != iterated)
      fail(ErrorKind::cross_check_failure,
           "closed-form matrix power disagrees with the iterated product");
    ordered_json arr = ordered_json::array();
    for (unsigned long j = 1; j <= n; ++j) {
      PellSolution s = nth_solution_via_matrix(sd, j);
      oracle_gate(s);
      arr.push_back(sol_json(s));
    }
    sec["solutions"] = std::move(arr);
    results["matrix"] = std::move(sec);
  }

  rec["results"] = std::move(results);
  rec["deviation_flags"] = deviations_json(dev);
  return rec;
}

struct FormArgs {
  std::vector<std::string> coeffs;  // a b c [g11 g12 g21 g22]
  std::string action = "reduce";
};

ordered_json run_form(const FormArgs& a, const GlobalOpts&) {
  QForm f{parse_int(a.coeffs[0], "a"), parse_int(a.coeffs[1], "b"),
          parse_int(a.coeffs[2], "c")};
  ordered_json rec{{"command", "form"},
                   {"inputs",
                    {{"form", form_json(f)},
                     {"action", a.action},
                     {"discriminant", dec(discriminant(f))}}}};
  ordered_json results;
  if (a.action == "reduce") {
    Reduction r = reduce(f);
    ordered_json steps = ordered_json::array();
    for (const RhoStep& st : r.trace)
      steps.push_back({{"form", form_json(st.form)}, {"r", dec(st.r)}});
    results["reduced"] = form_json(r.form);
    results["steps"] = std::move(steps);
    results["step_count"] = r.trace.size();
  } else if (a.action == "cycle" || a.action == "proper-cycle") {
    QForm start = f;
    if (!is_reduced(start)) {
      Reduction r = reduce(start);
      start = r.form;
      results["reduced_first"] = form_json(start);
    }
    if (start.a < 0) {
      start = tau(start);
      results["normalized_to"] = form_json(start);
    }
    FormCycle cy =
        a.action == "cycle" ? cycle(start) : proper_cycle(start);
    ordered_json arr = ordered_json::array();
    for (const QForm& g : cy.forms) arr.push_back(form_json(g));
    results["forms"] = std::move(arr);
    results["length"] = cy.length();
  } else if (a.action == "auto-check") {
    if (a.coeffs.size() != 7)
      fail(ErrorKind::invalid_input,
           "auto-check needs four matrix entries: form a b c g11 g12 g21 g22");
    Mat2 gmat{parse_int(a.coeffs[3], "g11"), parse_int(a.coeffs[4], "g12"),
              parse_int(a.coeffs[5], "g21"), parse_int(a.coeffs[6], "g22")};
    AutomorphismKind kind = is_automorphism(gmat, f);
    results["g"] = mat_json(gmat);
    results["det"] = dec(gmat.det());
    results["kind"] = kind == AutomorphismKind::proper     ? "proper"
                      : kind == AutomorphismKind::improper ? "improper"
                                                           : "none";
    results["image"] = form_json(gamma_action(gmat, f));
  } else {
    fail(ErrorKind::invalid_input,
         "action must be reduce, cycle, proper-cycle or auto-check");
  }
  rec["results"] = std::move(results);
  rec["deviation_flags"] = ordered_json::array();
  return rec;
}

struct VerifyArgs {
  std::string d, n, x, y;
};

ordered_json run_verify(const VerifyArgs& a, const GlobalOpts&) {
  Int d = parse_int(a.d, "d");
  Int n = parse_int(a.n, "N");
  Int x = parse_int(a.x, "x");
  Int y = parse_int(a.y, "y");
  bool ok = oracle::verify_solution(d, n, x, y);
  return {{"command", "verify"},
          {"inputs",
           {{"d", dec(d)}, {"n", dec(n)}, {"x", dec(x)}, {"y", dec(y)}}},
          {"results", {{"valid", ok}}},
          {"deviation_flags", ordered_json::array()}};
}

struct BruteArgs {
  std::string d, n;
  std::string y_max;
  bool fundamental = false;
};

ordered_json run_brute(const BruteArgs& a, const GlobalOpts& g) {
  Int d = parse_int(a.d, "d");
  Int n = parse_int(a.n, "N");
  Int y_max = parse_int(a.y_max.empty() ? g.y_max : a.y_max, "y-max");
  ordered_json rec{{"command", "brute"},
                   {"inputs",
                    {{"d", dec(d)},
                     {"n", dec(n)},
                     {"y_max", dec(y_max)},
                     {"fundamental", a.fundamental}}}};
  if (a.fundamental) {
    auto f = oracle::brute_fundamental(d, n, y_max);
    rec["results"] = {{"fundamental", f ? sol_json(*f) : ordered_json("absent")}};
  } else {
    ordered_json arr = ordered_json::array();
    for (const PellSolution& s : oracle::brute_pell(d, n, y_max))
      arr.push_back(sol_json(s));
    rec["results"] = {{"solutions", std::move(arr)}};
  }
  rec["deviation_flags"] = ordered_json::array();
  return rec;
}

// ------------------------------------------------------------------ errata

struct ErrataArgs {
  unsigned long abc_max = 5;
  unsigned long exp_max = 3;
  std::string sign = "both";
  std::string family = "both";
};

struct ErrataEntry {
  std::size_t count = 0;
  std::vector<ordered_json> examples;
};

const std::vector<std::pair<std::string, std::string>>& errata_claims() {
  static const std::vector<std::pair<std::string, std::string>> claims = {
      {"cf-minus-integer-part",
       "the expansion of sqrt(a^2k b^2l - c^m) is printed with integer part "
       "a^k b^l; the exact integer part is a^k b^l - 1"},
      {"plus1-fundamental-unit-family",
       "the closed form (2h a^k b^l - 1, 2h) is printed as fundamental for "
       "every minus-family member; at c^m = 1 it is the second solution"},
      {"neg1-exception-list",
       "x^2 - d y^2 = -1 is claimed unsolvable over the family except for "
       "the + c^m family with c = 1"},
      {"neg4-exception-list",
       "x^2 - d y^2 = -4 is claimed unsolvable over the family except for "
       "the + c^m family with c = 1, with witness (2 a^k b^l, 2)"},
      {"plus4-doubling",
       "doubling the N = 1 fundamental is claimed to give the N = 4 "
       "fundamental for every d not divisible by 4"},
      {"lucas-chain-argument",
       "the N = 1 chain is printed as L_n(x1, -1)/2, f_n(x1, -1); the exact "
       "chain needs first argument 2 x1"},
      {"minus4-chain-exponent",
       "the N = -4 chain is printed as z1^n / 4^(n-1); the exact chain is "
       "z1^(2n-1) / 4^(n-1)"},
      {"power-form-constant",
       "for d = a^2k + 2 a^m the fundamental x1 is printed as a^(2k-m); the "
       "exact value is a^(2k-m) + 1"},
      {"reduction-minus-labels",
       "the reduced forms printed for the two minus families are assigned "
       "to each other's family"},
      {"reduction-degenerate",
       "the printed minus-family reductions assume h >= 2; at h = 1 the "
       "integer part of sqrt(d) shifts and no printed case applies"},
      {"cycle-printed-entries",
       "printed closed-form cycles carry off-by-two outer coefficients and "
       "repeat themselves at degenerate parameters"},
      {"proper-cycle-sign-flips",
       "the printed proper cycle of the + 2c^m family repeats the plain "
       "cycle; odd positions carry sign-flipped forms"},
      {"matrix-solution-orientation",
       "solutions are printed as g^n (1,0)^T with the substitution-action "
       "generator; that extraction needs the transposed matrix"},
  };
  return claims;
}

std::string grid_params(const SpecialD& sd) {
  std::ostringstream os;
  os << "(a=" << sd.a << ", b=" << sd.b << ", c=" << sd.c << ", k=" << sd.k
     << ", l=" << sd.l << ", m=" << sd.m << ", i=" << sd.i << ", sign="
     << to_string(sd.sign) << ")";
  return os.str();
}

// Rules checked pointwise that the library operations do not themselves
// flag: the Lucas first argument, the -4 chain divisor, and the solution
// extraction orientation.
void check_analytic_rules(const SpecialD& sd, DeviationLog& dev) {
  PellSolution f = fundamental_special(sd);
  {
    // Claimed x_2 = L_2(x1, -1)/2 = (x1^2 - 2)/2; the exact second solution
    // is 2 x1^2 - 1.
    Int claimed_num = f.x * f.x - 2;
    Int truth = 2 * f.x * f.x - 1;
    std::string claimed = mpz_divisible_ui_p(claimed_num.get_mpz_t(), 2)
                              ? dec(claimed_num / 2)
                              : dec(claimed_num) + "/2 (not an integer)";
    log_deviation(&dev, "lucas-chain-argument",
                  "claimed x_2 = " + claimed + " for d=" + dec(sd.d) +
                      "; computed " + dec(truth));
  }
  {
    auto neg4 = fundamental_neg4(sd.d);
    if (neg4) {
      // Claimed second -4 solution z1^2 / 4; the square has norm +16/4 = +4,
      // so no power n matches the printed divisor past n = 1.
      Int sx = neg4->x * neg4->x + sd.d * neg4->y * neg4->y;
      Int sy = 2 * neg4->x * neg4->y;
      std::string claimed =
          (mpz_divisible_ui_p(sx.get_mpz_t(), 4) &&
           mpz_divisible_ui_p(sy.get_mpz_t(), 4))
              ? "(" + dec(sx / 4) + ", " + dec(sy / 4) + ") of norm 4"
              : "(" + dec(sx) + "/4, " + dec(sy) + "/4) (not integral)";
      std::vector<PellSolution> chain = solutions_4(sd.d, -4, 2);
      log_deviation(&dev, "minus4-chain-exponent",
                    "claimed second solution z1^2/4 = " + claimed +
                        " for d=" + dec(sd.d) + "; computed z1^3/4 = (" +
                        dec(chain[1].x) + ", " + dec(chain[1].y) + ")");
    }
  }
  {
    Mat2 gen = automorphism_generator(sd);
    Int gx = gen.m11, gy = gen.m21;  // g (1, 0)^T
    if (gx * gx - sd.d * gy * gy != 1)
      log_deviation(&dev, "matrix-solution-orientation",
                    "claimed g^1 (1,0)^T = (" + dec(gx) + ", " + dec(gy) +
                        ") for d=" + dec(sd.d) +
                        " is no solution; the transposed matrix gives (" +
                        dec(f.x) + ", " + dec(f.y) + ")");
  }
}

ordered_json run_errata(const ErrataArgs& a, const GlobalOpts&) {
  GridFilter filter;
  if (a.sign == "+" || a.sign == "plus") filter.sign = Sign::plus;
  else if (a.sign == "-" || a.sign == "minus") filter.sign = Sign::minus;
  else if (a.sign != "both") fail(ErrorKind::invalid_input, "sign filter must be +, - or both");
  if (a.family == "1") filter.family = 1;
  else if (a.family == "2") filter.family = 2;
  else if (a.family != "both") fail(ErrorKind::invalid_input, "family filter must be 1, 2 or both");

  std::map<std::string, ErrataEntry> found;
  constexpr std::size_t kMaxExamples = 3;
  std::size_t points = for_each_grid_point(
      a.abc_max, a.exp_max, filter, [&](const SpecialD& sd) {
        DeviationLog dev;
        try {
          predicted_cf(sd, &dev);
        } catch (const Error&) {
        }
        fundamental_special(sd, &dev);
        neg1_status(sd, &dev);
        neg4_status(sd, &dev);
        fundamental_4_special(sd, &dev);
        solutions_lucas_4(sd, 1, &dev);
        predicted_reduction(sd, &dev);
        try {
          predicted_cycle(sd, true, &dev);
        } catch (const Error&) {
        }
        if (sd.b == 1 && sd.c == sd.a && sd.l == sd.m &&
            sd.sign == Sign::plus && sd.i == 2)
          fundamental_power_form(sd.a, sd.k, sd.m, PowerVariant::d2_plus, &dev);
        check_analytic_rules(sd, dev);

        for (const Deviation& d : dev) {
          ErrataEntry& e = found[d.rule];
          ++e.count;
          if (e.examples.size() < kMaxExamples)
            e.examples.push_back({{"params", grid_params(sd)},
                                  {"d", dec(sd.d)},
                                  {"detail", d.detail}});
        }
      });

  ordered_json entries = ordered_json::array();
  for (const auto& [rule, claim] : errata_claims()) {
    auto it = found.find(rule);
    if (it == found.end()) continue;
    entries.push_back({{"rule", rule},
                       {"claim", claim},
                       {"counterexample_count", it->second.count},
                       {"examples", it->second.examples}});
  }
  return {{"command", "errata"},
          {"inputs",
           {{"abc_max", a.abc_max},
            {"exp_max", a.exp_max},
            {"sign", a.sign},
            {"family", a.family}}},
          {"results", {{"grid_points", points}, {"entries", std::move(entries)}}},
          {"deviation_flags", ordered_json::array()}};
}

// ------------------------------------------------------------------ driver

int run_args(const std::vector<std::string>& args, const GlobalOpts& globals,
             std::ostream& out, std::ostream& err);

int run_batch(const GlobalOpts& globals, std::istream& in, std::ostream& out,
              std::ostream& err) {
  std::string line;
  int worst = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> args;
    std::string tok;
    while (ls >> tok) args.push_back(tok);
    if (args.empty()) continue;
    int code = run_args(args, globals, out, err);
    worst = std::max(worst, code);
  }
  return worst;
}

int run_args(const std::vector<std::string>& args, const GlobalOpts& globals,
             std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Pell equation and quadratic form toolkit"};
  app.name("pellcf");
  app.fallthrough(true);

  GlobalOpts g = globals;
  app.add_flag("--json", g.json, "structured output, integers as decimal strings");
  app.add_flag("--timing", g.timing, "append elapsed time to the record");
  app.add_option("--max-period", g.max_period,
                 "state cap for continued fraction expansion");
  app.add_option("--y-max", g.y_max, "default brute-force search bound");
  app.require_subcommand(1);

  CfArgs cf_args;
  auto* cf_cmd = app.add_subcommand("cf", "continued fraction of (p0 + sqrt(d))/q0");
  cf_cmd->add_option("d", cf_args.d, "radicand")->required();
  cf_cmd->add_option("--p0", cf_args.p0, "numerator shift (default 0)");
  cf_cmd->add_option("--q0", cf_args.q0, "denominator (default 1)");
  cf_cmd->add_option("--convergents", cf_args.convergent_count,
                     "also print the first N convergents");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "solve x^2 - d y^2 = N");
  solve_cmd->add_option("d", solve_args.d)->required();
  solve_cmd->add_option("N", solve_args.n, "one of 1, -1, 4, -4")->required();
  solve_cmd->add_option("--count", solve_args.count, "number of solutions");

  SpecialArgs special_args;
  auto* special_cmd =
      app.add_subcommand("special", "inspect d = a^2k b^2l +- i c^m");
  special_cmd->add_option("params", special_args.params, "a b c k l m i sign")
      ->expected(8);
  special_cmd
      ->add_option("--show", special_args.show, "cf|fundamental|lucas|matrix|all")
      ->check(CLI::IsMember({"cf", "fundamental", "lucas", "matrix", "all"}));
  special_cmd->add_option("--count", special_args.count, "chain length");

  FormArgs form_args;
  auto* form_cmd = app.add_subcommand("form", "binary quadratic form machinery");
  form_cmd->add_option("coeffs", form_args.coeffs,
                       "a b c [g11 g12 g21 g22 for auto-check]")
      ->expected(3, 7);
  form_cmd->add_option("--action", form_args.action,
                       "reduce|cycle|proper-cycle|auto-check");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "check x^2 - d y^2 = N exactly");
  verify_cmd->add_option("d", verify_args.d)->required();
  verify_cmd->add_option("N", verify_args.n)->required();
  verify_cmd->add_option("x", verify_args.x)->required();
  verify_cmd->add_option("y", verify_args.y)->required();

  BruteArgs brute_args;
  auto* brute_cmd = app.add_subcommand("brute", "exhaustive solution search");
  brute_cmd->add_option("d", brute_args.d)->required();
  brute_cmd->add_option("N", brute_args.n)->required();
  brute_cmd->add_option("--y-max", brute_args.y_max, "search bound (overrides global)");
  brute_cmd->add_flag("--fundamental", brute_args.fundamental,
                      "report only the least positive solution");

  ErrataArgs errata_args;
  auto* errata_cmd = app.add_subcommand(
      "errata", "closed-form rules that disagree with exact computation");
  errata_cmd->add_option("--abc-max", errata_args.abc_max, "grid bound for a, b, c");
  errata_cmd->add_option("--exp-max", errata_args.exp_max, "grid bound for k, l, m");
  errata_cmd->add_option("--sign", errata_args.sign, "+|-|both");
  errata_cmd->add_option("--family", errata_args.family, "1|2|both");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto started = std::chrono::steady_clock::now();
  try {
    ordered_json rec;
    if (*cf_cmd) rec = run_cf(cf_args, g);
    else if (*solve_cmd) rec = run_solve(solve_args, g);
    else if (*special_cmd) rec = run_special(special_args, g);
    else if (*form_cmd) rec = run_form(form_args, g);
    else if (*verify_cmd) rec = run_verify(verify_args, g);
    else if (*brute_cmd) rec = run_brute(brute_args, g);
    else rec = run_errata(errata_args, g);
    if (g.timing) {
      auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                    std::chrono::steady_clock::now() - started)
                    .count();
      rec["elapsed_us"] = us;
    }
    emit(rec, g, out);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (g.json) {
      ordered_json rec{{"command", args.empty() ? "" : args.front()},
                       {"error",
                        {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
      out << rec.dump() << "\n";
    }
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  GlobalOpts globals;

  bool batch = false;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--batch") {
      batch = true;
    } else {
      rest.push_back(args[i]);
    }
  }
  if (batch) {
    // Batch lines inherit flags given on the command line itself.
    for (const std::string& flag : rest) {
      if (flag == "--json") globals.json = true;
      else if (flag == "--timing") globals.timing = true;
      else {
        std::cerr << "error: --batch accepts only --json/--timing alongside\n";
        return 2;
      }
    }
    return run_batch(globals, std::cin, std::cout, std::cerr);
  }
  return run_args(rest, globals, std::cout, std::cerr);
}
