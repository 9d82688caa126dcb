#pragma once

#include <string>
#include <utility>

#include "sturmian/integer.hpp"

namespace sturmian {

/// The real number a + b*alpha with integer coefficients.
///
/// Since alpha is irrational the pair (a, b) is a canonical representation:
/// two forms denote the same number iff their coefficients agree. Ordering
/// needs the angle and lives on Angle.
struct LinearForm {
  Integer a;
  Integer b;

  LinearForm() = default;
  LinearForm(Integer a_, Integer b_) : a(std::move(a_)), b(std::move(b_)) {}

  static LinearForm constant(Integer v) { return {std::move(v), 0}; }
  static LinearForm alpha() { return {0, 1}; }
  static LinearForm one() { return {1, 0}; }
  static LinearForm zero() { return {}; }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  LinearForm& operator+=(const LinearForm& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  LinearForm& operator-=(const LinearForm& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  LinearForm& operator*=(const Integer& k) {
    a *= k;
    b *= k;
    return *this;
  }

  friend LinearForm operator+(LinearForm l, const LinearForm& r) { return l += r; }
  friend LinearForm operator-(LinearForm l, const LinearForm& r) { return l -= r; }
  friend LinearForm operator-(const LinearForm& f) { return {-f.a, -f.b}; }
  friend LinearForm operator*(LinearForm f, const Integer& k) { return f *= k; }
  friend LinearForm operator*(const Integer& k, LinearForm f) { return f *= k; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;

  /// "a + b*alpha" with the sign folded in, e.g. "1 - 2*alpha".
  std::string to_string() const;
};

}  // namespace sturmian
