#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "sturmian/angle.hpp"
#include "sturmian/integer.hpp"
#include "sturmian/jumps.hpp"

namespace sturmian {

using HighPrecision = boost::multiprecision::cpp_dec_float_100;

std::string to_decimal(const HighPrecision& v, int significant = 30);

/// Finite-depth proxies for liminf q_k/r_k and limsup q_{k+1}/r_k: extrema
/// over k in [K/2, K] and the values at k = K. These are estimates, not limits.
struct RateEstimate {
  std::size_t window_begin = 0;
  std::size_t window_end = 0;
  Rational lower;
  Rational upper;
  Rational lower_last;
  Rational upper_last;
  bool lower_converged = false;  // |lower - lower_last| <= tol
  bool upper_converged = false;
};

/// Requires depth >= 2.
RateEstimate rate_estimates(const ReturnProfile& profile, double tol = 1e-6);

/// r_0 = liminf q_k/(q_{k+1} + q_k - 1) and r_1 = limsup q_{k+1}/q_k.
struct RateConstants {
  std::size_t depth = 0;
  std::uint64_t M = 0;   // max a_k: over the period when periodic, else over a_1..a_{K+1}
  bool M_exact = false;  // true for periodic providers

  Rational r0_estimate;  // min over k in [K/2, K]
  Rational r1_estimate;  // max over k in [K/2, K]
  Rational r0_last;
  Rational r1_last;
  bool r0_converged = false;
  bool r1_converged = false;

  /// Exact limits of a periodic provider, per residue class of k mod the period:
  /// q_{k+1}/q_k tends to the purely periodic [c_t; c_{t-1}, c_{t-2}, ...].
  struct Limits {
    HighPrecision r0;
    HighPrecision r1;
  };
  std::optional<Limits> limits;

  // Bound chain 1/(M+2) <= r0 <= gamma^-2 < gamma <= r1 <= M+1, on the limits
  // when known and on the estimates otherwise.
  bool lower_bound = false;
  bool r0_below_golden = false;
  bool r1_above_golden = false;
  bool upper_bound = false;
  /// |r1 - (1/r0 - 1)| on the limits; periodic providers only.
  std::optional<HighPrecision> identity_error;

  bool chain_holds() const {
    return lower_bound && r0_below_golden && r1_above_golden && upper_bound;
  }
  HighPrecision r0_value() const;
  HighPrecision r1_value() const;
};

/// Requires K >= 2 and K + 1 available digits.
RateConstants rate_constants(const Angle& angle, std::size_t K, double tol = 1e-6);

HighPrecision golden_ratio();
HighPrecision to_high_precision(const Rational& v);

}  // namespace sturmian
