#pragma once

#include <string>

#include "sturmian/angle.hpp"
#include "sturmian/integer.hpp"
#include "sturmian/linear_form.hpp"

namespace sturmian {

/// num/den rendered to `significant` digits, round-half-even, computed exactly
/// (every digit and the rounding decision come from exact sign tests).
/// Fixed notation for magnitudes in [1e-6, 1e30), scientific otherwise.
std::string to_decimal(const LinearForm& num, const LinearForm& den, const Angle& angle,
                       int significant = 30);

inline std::string to_decimal(const LinearForm& value, const Angle& angle, int significant = 30) {
  return to_decimal(value, LinearForm::one(), angle, significant);
}

std::string to_decimal(const Rational& value, int significant = 30);

}  // namespace sturmian
