#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sturmian/angle.hpp"
#include "sturmian/integer.hpp"

namespace sturmian {

/// A finite path x_1 ... x_k in the digit space X_alpha.
class DigitWord {
 public:
  DigitWord() = default;
  explicit DigitWord(std::vector<std::uint64_t> digits) : digits_(std::move(digits)) {}

  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  /// x_j, 1-based.
  std::uint64_t operator[](std::size_t j) const { return digits_.at(j - 1); }
  const std::vector<std::uint64_t>& digits() const noexcept { return digits_; }

  void push_back(std::uint64_t d) { digits_.push_back(d); }
  DigitWord prefix(std::size_t k) const;

  /// Digits run together when all are below 10 ("20"), dot-separated otherwise ("12.0").
  std::string label() const;

  friend bool operator==(const DigitWord&, const DigitWord&) = default;
  friend auto operator<=>(const DigitWord&, const DigitWord&) = default;

 private:
  std::vector<std::uint64_t> digits_;
};

/// "2,0,3" or "203" (single-character digits only).
DigitWord parse_digit_word(std::string_view text);

/// Throws ConstraintViolation at the first bad digit.
void validate(const DigitWord& x, const Angle& angle);
bool is_valid(const DigitWord& x, const Angle& angle);

/// sum_{j=0}^{k-1} x_{j+1} q_j for a word of length k.
Integer ostrowski_decode(const DigitWord& x, const Angle& angle);

/// L^k(X_alpha) in lexicographic order.
std::vector<DigitWord> digit_language(std::size_t k, const Angle& angle);

enum class ExtremalPoint { b, c, d };

/// b = (a_1, a_2, ...), c = (1, a_2, 0, a_4, 0, ...), d = (a_1, 0, a_3, 0, ...), first `length` digits.
DigitWord extremal_point(ExtremalPoint which, std::size_t length, const Angle& angle);

}  // namespace sturmian
