#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sturmian/angle.hpp"
#include "sturmian/digit_word.hpp"
#include "sturmian/integer.hpp"
#include "sturmian/jumps.hpp"
#include "sturmian/linear_form.hpp"
#include "sturmian/rates.hpp"

namespace sturmian {

enum class Execution { serial, parallel };

using EtaSequence = std::function<LinearForm(long)>;

/// Law of W_{k+1} given the context of W_k. Every digit below the last one
/// has probability small/denominator; the last digit a_{k+1} has last/denominator.
///
///   k = 0:          digits 1..a_1,        small eta_0, last eta_0 + eta_1, denominator eta_{-1} = 1
///   W_k < a_k:      digits 1..a_{k+1},    small eta_k, last eta_k + eta_{k+1}, denominator eta_{k-1}
///   W_k = a_k:      digits 0..a_{k+1},    same numerators, denominator eta_{k-1} + eta_k
struct TransitionRow {
  std::size_t k = 0;
  bool after_max = false;
  std::uint64_t first_digit = 1;
  std::uint64_t last_digit = 1;
  LinearForm small;
  LinearForm last;
  LinearForm denominator;

  /// Numerator of mu[W_{k+1} = j | context]; zero outside the support.
  LinearForm numerator(std::uint64_t j) const;
  /// (last_digit - first_digit) * small + last == denominator, as forms.
  bool sums_to_one() const;
};

TransitionRow transition_row(std::size_t k, bool after_max, const Angle& angle);
/// Same table driven by a caller-supplied eta sequence (fault injection).
TransitionRow transition_row(std::size_t k, bool after_max, const Angle& angle,
                             const EtaSequence& eta);

/// mu{x : x(k) = u} as a single form. Consecutive factors cancel (the
/// numerator of step i is the denominator of step i + 1) and the first
/// denominator is 1, so the product collapses to the last numerator.
/// Returns nullopt if some factor fails to cancel.
std::optional<LinearForm> path_probability(const DigitWord& u, const Angle& angle);
std::optional<LinearForm> path_probability(const DigitWord& u, const Angle& angle,
                                           const EtaSequence& eta);

/// Draws digit j from a row: with U a 128-bit uniform integer, the smallest
/// j whose cumulative numerator exceeds U * denominator / 2^128.
std::uint64_t sample_digit(const TransitionRow& row, const Integer& uniform128, const Angle& angle);

/// K digits of the chain, stream (seed, index), step k drawing counter (index, k).
DigitWord sample_point(const Angle& angle, std::size_t K, std::uint64_t seed,
                       std::uint64_t index = 0);

struct SampleResult {
  std::uint64_t index = 0;
  DigitWord digits;
  RateEstimate estimate;
  bool bounds_ok = true;
};

struct EmpiricalSummary {
  std::size_t depth = 0;
  std::uint64_t seed = 0;
  double eps = 0.05;
  std::vector<SampleResult> samples;  // ordered by index
  Rational median_lower;
  Rational median_upper;
  /// Reference constants: exact limits for periodic angles, depth-K estimates otherwise.
  HighPrecision r0_target;
  HighPrecision r1_target;
  double fraction_lower_within = 0;  // |lower - r0| <= eps
  double fraction_upper_within = 0;  // |upper - r1| <= eps
  std::size_t bound_violations = 0;
};

/// Samples n points of depth K + 1, computes r_0..r_K by the recurrence and
/// summarises the rate estimates. Requires K >= 2, n >= 1.
EmpiricalSummary empirical_rates(const Angle& angle, std::size_t K, std::size_t n,
                                 std::uint64_t seed, Execution exec = Execution::parallel,
                                 double eps = 0.05);

}  // namespace sturmian
