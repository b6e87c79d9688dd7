#include "pellcf/errors.hpp"

namespace pellcf {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid_input";
    case ErrorKind::square_radicand: return "square_radicand";
    case ErrorKind::period_limit_exceeded: return "period_limit_exceeded";
    case ErrorKind::no_solution: return "no_solution";
    case ErrorKind::divisibility_violation: return "divisibility_violation";
    case ErrorKind::exponent_violation: return "exponent_violation";
    case ErrorKind::square_d: return "square_d";
    case ErrorKind::nonpositive_d: return "nonpositive_d";
    case ErrorKind::pattern_inapplicable: return "pattern_inapplicable";
    case ErrorKind::not_indefinite: return "not_indefinite";
    case ErrorKind::not_unimodular: return "not_unimodular";
    case ErrorKind::zero_outer_coefficient: return "zero_outer_coefficient";
    case ErrorKind::not_reduced: return "not_reduced";
    case ErrorKind::not_a_solution: return "not_a_solution";
    case ErrorKind::cross_check_failure: return "cross_check_failure";
  }
  return "unknown";
}

}  // namespace pellcf
