#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sturmian/angle.hpp"
#include "sturmian/digit_word.hpp"
#include "sturmian/integer.hpp"
#include "sturmian/packed_bits.hpp"
#include "sturmian/rotation.hpp"

namespace sturmian {

/// Jump times r_0..r_K of one point with the convergent denominators they are
/// compared against.
struct ReturnProfile {
  std::vector<Integer> q;  // q_0 .. q_{K+1}
  std::vector<Integer> r;  // r_0 .. r_K

  std::size_t depth() const { return r.empty() ? 0 : r.size() - 1; }
  Rational lower_ratio(std::size_t k) const { return Rational(q[k], r[k]); }      // q_k / r_k
  Rational upper_ratio(std::size_t k) const { return Rational(q[k + 1], r[k]); }  // q_{k+1} / r_k

  /// First k violating q_k <= r_k <= q_{k+1} + q_k - 1, if any.
  std::optional<std::size_t> bound_violation() const;

  friend bool operator==(const ReturnProfile&, const ReturnProfile&) = default;
};

/// r_k = sum_{j=0}^k x_{j+1} q_j. Needs K + 1 digits.
ReturnProfile jumps_by_formula(const DigitWord& x, std::size_t K, const Angle& angle);

/// r_k = min{n : tau(I_{x(n)}) >= q_{k+1}}, scanning the prefix and applying
/// the Klein rule each time the cylinder shrinks. The rule is read through its
/// bracket index (|I_{x(n)}| <= eta_k), which differs from the tau form only
/// where q_{k+1} = q_k. Needs a prefix of length r_K, at most q_{K+1} + q_K - 1.
ReturnProfile jumps_by_definition(const PackedBits& prefix, std::size_t K, const Angle& angle,
                                  const KleinRule& rule);
ReturnProfile jumps_by_definition(const PackedBits& prefix, std::size_t K, const Angle& angle);

/// Prefix length sufficient for jumps_by_definition at depth K.
std::size_t definition_prefix_length(std::size_t K, const Angle& angle);

}  // namespace sturmian
