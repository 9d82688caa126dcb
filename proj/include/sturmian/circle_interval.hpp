#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sturmian/angle.hpp"
#include "sturmian/linear_form.hpp"

namespace sturmian {

/// A half-open arc [left, right) of the circle T = [0, 1).
///
/// Endpoints are forms in [0, 1). When right <= left the arc wraps through
/// 0; an arc ending at 1 is stored with right = 0, so [x, 0) means [x, 1).
/// Empty and full-circle intervals are distinct kinds rather than
/// degenerate arcs. Endpoints that are cut points {-i alpha} keep their index.
class CircleInterval {
 public:
  enum class Kind { empty, arc, full };

  static CircleInterval empty() { return CircleInterval(Kind::empty); }
  static CircleInterval full() { return CircleInterval(Kind::full); }
  /// Requires left != right, both in [0, 1).
  static CircleInterval arc(const Angle& angle, LinearForm left, LinearForm right,
                            std::optional<std::uint64_t> left_cut = std::nullopt,
                            std::optional<std::uint64_t> right_cut = std::nullopt);
  /// [x_l, x_r) between cut points; l == r gives the full circle.
  static CircleInterval between_cuts(const Angle& angle, std::uint64_t left_cut,
                                     std::uint64_t right_cut);

  Kind kind() const noexcept { return kind_; }
  bool is_empty() const noexcept { return kind_ == Kind::empty; }
  bool is_full() const noexcept { return kind_ == Kind::full; }
  bool wraps() const noexcept { return wraps_; }

  const LinearForm& left() const noexcept { return left_; }
  const LinearForm& right() const noexcept { return right_; }
  const LinearForm& length() const noexcept { return length_; }
  std::optional<std::uint64_t> left_cut() const noexcept { return left_cut_; }
  std::optional<std::uint64_t> right_cut() const noexcept { return right_cut_; }

  bool contains(const Angle& angle, const LinearForm& x) const;

  std::string to_string() const;

  /// Same point set; cut labels are not compared.
  friend bool operator==(const CircleInterval& x, const CircleInterval& y) {
    if (x.kind_ != y.kind_) return false;
    if (x.kind_ != Kind::arc) return true;
    return x.left_ == y.left_ && x.right_ == y.right_;
  }

 private:
  explicit CircleInterval(Kind k);

  Kind kind_;
  bool wraps_ = false;
  LinearForm left_;
  LinearForm right_;
  LinearForm length_;
  std::optional<std::uint64_t> left_cut_;
  std::optional<std::uint64_t> right_cut_;
};

/// Intersection of two intervals. Throws if the result is not a single arc.
CircleInterval intersect(const CircleInterval& x, const CircleInterval& y, const Angle& angle);

}  // namespace sturmian
