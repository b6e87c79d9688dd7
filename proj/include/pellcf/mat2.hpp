#pragma once

#include "pellcf/integer.hpp"

namespace pellcf {

struct Mat2 {
  Int m11, m12, m21, m22;

  static Mat2 identity() { return {1, 0, 0, 1}; }

  Int det() const { return m11 * m22 - m12 * m21; }

  Mat2 transposed() const { return {m11, m21, m12, m22}; }

  Mat2 operator*(const Mat2& o) const {
    return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
            m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
  }

  bool operator==(const Mat2&) const = default;
};

}  // namespace pellcf
