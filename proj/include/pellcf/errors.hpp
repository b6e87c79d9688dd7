#pragma once

#include <stdexcept>
#include <string>

namespace pellcf {

enum class ErrorKind {
  invalid_input,
  square_radicand,
  period_limit_exceeded,
  no_solution,
  divisibility_violation,
  exponent_violation,
  square_d,
  nonpositive_d,
  pattern_inapplicable,
  not_indefinite,
  not_unimodular,
  zero_outer_coefficient,
  not_reduced,
  not_a_solution,
  cross_check_failure,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace pellcf
