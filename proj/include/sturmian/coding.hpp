#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "sturmian/angle.hpp"
#include "sturmian/circle_interval.hpp"
#include "sturmian/digit_word.hpp"
#include "sturmian/rotation.hpp"

namespace sturmian {

/// J_u built one digit at a time.
///
/// At depth k the interval is (-1)^{k-1}[x_c, x_d): [x_c, x_d) for odd k and
/// [x_d, x_c) for even k. The pair (c, d) of the child is computed from the
/// pair (a, b) of the parent, Q = q_{k-1} and the previous digit:
///
///   k = 1:             u < a_1: (u, u - 1)              u = a_1: (0, a_1 - 1)
///   previous < a_{k-1}: u < a_k: (uQ + a, (u - 1)Q + a)  u = a_k: (b, (a_k - 1)Q + a)
///   previous = a_{k-1}: u < a_k: ((u + 1)Q + a, uQ + a)  u = a_k: (b, a_kQ + a)
///
/// c = d only for J_1 with a_1 = 1, the full circle.
class JCursor {
 public:
  explicit JCursor(Angle angle);

  /// Throws ConstraintViolation if the digit cannot follow the current word.
  void push(std::uint64_t digit);

  std::size_t depth() const noexcept { return word_.size(); }
  const DigitWord& word() const noexcept { return word_; }
  std::uint64_t c() const noexcept { return c_; }
  std::uint64_t d() const noexcept { return d_; }

  bool is_full() const noexcept { return word_.empty() || c_ == d_; }
  /// Cut indices of J_u in circle order, [x_left, x_right).
  std::uint64_t left_cut() const noexcept { return depth() % 2 == 1 ? c_ : d_; }
  std::uint64_t right_cut() const noexcept { return depth() % 2 == 1 ? d_ : c_; }

  CircleInterval interval() const;
  /// eta_{k-1} if u_k < a_k, eta_{k-1} + eta_k otherwise.
  LinearForm length() const;

  /// The digit u with J_{word u} = [x_left, x_right), if there is one.
  /// A full circle is passed as left = right = 0.
  std::optional<std::uint64_t> child_digit(std::uint64_t left, std::uint64_t right) const;

 private:
  struct Pair {
    Integer c;
    Integer d;
  };
  Pair child(std::uint64_t digit) const;

  Angle angle_;
  DigitWord word_;
  std::uint64_t c_ = 0;
  std::uint64_t d_ = 0;
};

CircleInterval build_J_interval(const DigitWord& u, const Angle& angle);

/// gamma on binary words: feeds symbols and emits digit x_j at length q_j - 1.
class GammaEncoder {
 public:
  explicit GammaEncoder(Angle angle);

  /// False, with no state change, if the extended word is not in the language.
  bool push(bool bit);

  const DigitWord& digits() const noexcept { return cursor_.word(); }
  const CylinderTracker& tracker() const noexcept { return tracker_; }

 private:
  void emit();

  Angle angle_;
  CylinderTracker tracker_;
  JCursor cursor_;
};

/// The digit word u of length k with J_u = I_word; |word| must be q_k - 1.
DigitWord gamma_encode(std::string_view word, std::size_t k, const Angle& angle);
/// Same with k the largest index such that q_k - 1 = |word|.
DigitWord gamma_encode(std::string_view word, const Angle& angle);

}  // namespace sturmian
