#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sturmian/angle.hpp"
#include "sturmian/packed_bits.hpp"

namespace sturmian {

/// Itinerary s_0 ... s_{L-1} of the orbit x0 + i alpha under the two-cell
/// partition: s_i = 1 iff {x0 + i alpha} lies in [1 - alpha, 1).
struct MechanicalPrefix {
  LinearForm origin;
  PackedBits bits;

  std::size_t size() const noexcept { return bits.size(); }
  std::string to_string() const { return bits.to_string(); }
};

MechanicalPrefix generate_prefix(const Angle& angle, const LinearForm& x0, std::size_t length);
inline MechanicalPrefix generate_prefix(const Angle& angle, std::size_t length) {
  return generate_prefix(angle, LinearForm::zero(), length);
}

/// K = max{k >= -1 : q_k <= n}; q_{K+1} bounds every return time at scale n.
long scale_index(std::size_t n, const Angle& angle);

/// Prefix length that contains every factor of length n: n + 2(q_{K+2} + q_{K+1}).
std::size_t language_window(std::size_t n, const Angle& angle);

/// Prefix length over which minimal occurrence gaps of length-n factors are
/// certified: n + q_{K+1} + 2(q_{K+3} + q_{K+2}). Always at least
/// n + 2 q_{k+1} for the bracket k of any cylinder at scale n.
std::size_t occurrence_window(std::size_t n, const Angle& angle);

/// L^n, sorted. Throws if the factor count is not n + 1.
std::vector<std::string> language(std::size_t n, const Angle& angle);

/// Distinct factors of length n in bits[0, window), sorted.
std::vector<std::string> factors(const PackedBits& bits, std::size_t n, std::size_t window);

/// Minimal positive gap between occurrences of u in bits[0, window), by
/// shift-and-compare on packed blocks. Returns 0 when u occurs at most once.
std::uint64_t min_occurrence_gap(const PackedBits& bits, std::string_view u, std::size_t window);

/// tau([u]) as the minimal distance between occurrences of u in the coding of 0.
/// Throws DomainError if u is not in the language.
std::uint64_t tau_word_oracle(std::string_view u, const Angle& angle);

/// tau_word_oracle over one cached prefix of the coding of 0, grown on demand.
class WordOracle {
 public:
  explicit WordOracle(Angle angle);
  std::uint64_t tau(std::string_view u);
  /// Coding of 0, at least `length` symbols long.
  const PackedBits& prefix(std::size_t length);
  const Angle& angle() const noexcept { return angle_; }

 private:
  Angle angle_;
  PackedBits prefix_;
};

struct FactorOccurrences {
  std::uint64_t first = 0;
  std::uint64_t count = 0;
  std::uint64_t min_gap = 0;  // 0 while seen only once
};

/// Occurrence statistics of every length-n factor in bits[0, window), one pass.
std::unordered_map<std::string, FactorOccurrences> factor_occurrences(const PackedBits& bits,
                                                                      std::size_t n,
                                                                      std::size_t window);

}  // namespace sturmian
