#include "pellcf/oracle.hpp"

namespace pellcf::oracle {
namespace {

// Scans y = y_lo .. y_max for x^2 = n_value + d y^2; calls sink(x, y) for
// each hit and stops early when sink returns false. The loop stays on
// machine-word y whenever y_max allows it.
template <typename Sink>
void scan(const Int& d, const Int& n_value, const Int& y_lo, const Int& y_max,
          Sink&& sink) {
  Int t, x;
  if (y_max.fits_ulong_p()) {
    unsigned long hi = y_max.get_ui();
    unsigned long lo = y_lo.get_ui();
    for (unsigned long y = lo; y <= hi; ++y) {
      mpz_mul_ui(t.get_mpz_t(), d.get_mpz_t(), y);
      mpz_mul_ui(t.get_mpz_t(), t.get_mpz_t(), y);
      t += n_value;
      if (t < 0) continue;
      if (mpz_perfect_square_p(t.get_mpz_t())) {
        mpz_sqrt(x.get_mpz_t(), t.get_mpz_t());
        if (!sink(x, Int(y))) return;
      }
    }
    return;
  }
  for (Int y = y_lo; y <= y_max; ++y) {
    t = n_value + d * y * y;
    if (t < 0) continue;
    if (mpz_perfect_square_p(t.get_mpz_t())) {
      mpz_sqrt(x.get_mpz_t(), t.get_mpz_t());
      if (!sink(x, y)) return;
    }
  }
}

}  // namespace

bool verify_solution(const Int& d, const Int& n_value, const Int& x,
                     const Int& y) {
  return x * x - d * y * y == n_value;
}

std::vector<PellSolution> brute_pell(const Int& d, const Int& n_value,
                                     const Int& y_max) {
  std::vector<PellSolution> out;
  if (y_max < 0) return out;
  scan(d, n_value, 0, y_max, [&](const Int& x, const Int& y) {
    out.push_back({x, y, d, n_value, out.size() + 1});
    return true;
  });
  return out;
}

std::optional<PellSolution> brute_fundamental(const Int& d, const Int& n_value,
                                              const Int& y_max) {
  std::optional<PellSolution> found;
  if (y_max < 1) return found;
  scan(d, n_value, 1, y_max, [&](const Int& x, const Int& y) {
    if (x < 1) return true;  // only positive solutions qualify
    found = PellSolution{x, y, d, n_value, 1};
    return false;
  });
  return found;
}

}  // namespace pellcf::oracle
