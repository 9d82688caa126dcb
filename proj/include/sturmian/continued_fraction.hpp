#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sturmian {

/// The angle alpha = [0; a_1, a_2, ...] given by its partial quotients.
///
/// Two kinds of provider exist. A finite provider knows a_1..a_depth and
/// nothing beyond; asking for a_{depth+1} throws InsufficientPrecision. An
/// eventually periodic provider (preamble followed by a repeating period) is
/// infinite and describes a quadratic irrational exactly.
class ContinuedFraction {
 public:
  static ContinuedFraction finite(std::vector<std::uint64_t> digits);
  static ContinuedFraction periodic(std::vector<std::uint64_t> preamble,
                                    std::vector<std::uint64_t> period);

  static ContinuedFraction golden() { return periodic({}, {1}); }
  static ContinuedFraction silver() { return periodic({}, {2}); }

  /// a_k = k for k = 1..depth. Finite surrogate for an unbounded expansion.
  static ContinuedFraction linear_schedule(std::size_t depth);
  /// a_k = 2^k for k = 1..depth (depth <= 63).
  static ContinuedFraction power_schedule(std::size_t depth);

  /// a_k for k >= 1.
  std::uint64_t digit(std::size_t k) const;

  /// Number of available digits, or nullopt for an infinite (periodic) provider.
  std::optional<std::size_t> depth() const;
  bool has_digit(std::size_t k) const;

  bool is_periodic() const noexcept { return !period_.empty(); }
  const std::vector<std::uint64_t>& preamble() const noexcept { return preamble_; }
  const std::vector<std::uint64_t>& period() const noexcept { return period_; }

  /// e.g. "[0; 2, 3, (3)]" or "[0; 1, 2, 3]".
  std::string describe() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  ContinuedFraction(std::vector<std::uint64_t> preamble, std::vector<std::uint64_t> period);

  std::vector<std::uint64_t> preamble_;
  std::vector<std::uint64_t> period_;
};

}  // namespace sturmian
