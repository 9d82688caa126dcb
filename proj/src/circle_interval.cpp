#include "sturmian/circle_interval.hpp"

#include <vector>

#include "sturmian/errors.hpp"

namespace sturmian {

CircleInterval::CircleInterval(Kind k) : kind_(k) {
  if (k == Kind::full) length_ = LinearForm::one();
}

CircleInterval CircleInterval::arc(const Angle& angle, LinearForm left, LinearForm right,
                                   std::optional<std::uint64_t> left_cut,
                                   std::optional<std::uint64_t> right_cut) {
  CircleInterval out(Kind::arc);
  const int c = angle.compare(right, left);
  if (c == 0) throw DomainError("arc endpoints coincide; use full() or empty()");
  out.wraps_ = c < 0;
  out.length_ = right - left;
  if (out.wraps_) out.length_ += LinearForm::one();
  out.left_ = std::move(left);
  out.right_ = std::move(right);
  out.left_cut_ = left_cut;
  out.right_cut_ = right_cut;
  return out;
}

CircleInterval CircleInterval::between_cuts(const Angle& angle, std::uint64_t left_cut,
                                            std::uint64_t right_cut) {
  if (left_cut == right_cut) return full();
  return arc(angle, angle.frac_position(left_cut), angle.frac_position(right_cut), left_cut,
             right_cut);
}

bool CircleInterval::contains(const Angle& angle, const LinearForm& x) const {
  switch (kind_) {
    case Kind::empty:
      return false;
    case Kind::full:
      return true;
    case Kind::arc:
      break;
  }
  const bool after_left = angle.compare(x, left_) >= 0;
  const bool before_right = angle.compare(x, right_) < 0;
  return wraps_ ? (after_left || before_right) : (after_left && before_right);
}

std::string CircleInterval::to_string() const {
  switch (kind_) {
    case Kind::empty:
      return "empty";
    case Kind::full:
      return "[0, 1)";
    case Kind::arc:
      break;
  }
  auto end = [](const LinearForm& f, std::optional<std::uint64_t> cut) {
    std::string s = f.to_string();
    if (cut) s += " (x" + std::to_string(*cut) + ")";
    return s;
  };
  return "[" + end(left_, left_cut_) + ", " + end(right_, right_cut_) + ")";
}

namespace {

// A linear piece [lo, hi) with 0 <= lo < hi <= 1.
struct Piece {
  LinearForm lo;
  std::optional<std::uint64_t> lo_cut;
  LinearForm hi;
  std::optional<std::uint64_t> hi_cut;
};

std::vector<Piece> pieces(const CircleInterval& x) {
  switch (x.kind()) {
    case CircleInterval::Kind::empty:
      return {};
    case CircleInterval::Kind::full:
      return {{LinearForm::zero(), 0, LinearForm::one(), 0}};
    case CircleInterval::Kind::arc:
      break;
  }
  if (!x.wraps()) return {{x.left(), x.left_cut(), x.right(), x.right_cut()}};
  std::vector<Piece> out{{x.left(), x.left_cut(), LinearForm::one(), 0}};
  if (!x.right().is_zero()) out.push_back({LinearForm::zero(), 0, x.right(), x.right_cut()});
  return out;
}

}  // namespace

CircleInterval intersect(const CircleInterval& x, const CircleInterval& y, const Angle& angle) {
  if (x.is_empty() || y.is_empty()) return CircleInterval::empty();
  if (x.is_full()) return y;
  if (y.is_full()) return x;

  std::vector<Piece> out;
  for (const auto& p : pieces(x)) {
    for (const auto& r : pieces(y)) {
      const Piece& lo = angle.compare(p.lo, r.lo) >= 0 ? p : r;
      const Piece& hi = angle.compare(p.hi, r.hi) <= 0 ? p : r;
      if (angle.compare(lo.lo, hi.hi) < 0) out.push_back({lo.lo, lo.lo_cut, hi.hi, hi.hi_cut});
    }
  }
  if (out.empty()) return CircleInterval::empty();

  auto to_arc = [&](const Piece& lo_end, const Piece& hi_end) {
    LinearForm right = hi_end.hi;
    if (right == LinearForm::one()) right = LinearForm::zero();
    if (lo_end.lo.is_zero() && right.is_zero()) return CircleInterval::full();
    return CircleInterval::arc(angle, lo_end.lo, right, lo_end.lo_cut, hi_end.hi_cut);
  };
  if (out.size() == 1) return to_arc(out[0], out[0]);
  if (out.size() == 2) {
    // Two pieces glue across 0 into one wrapping arc: [l, 1) and [0, r).
    const Piece* top = nullptr;
    const Piece* bottom = nullptr;
    for (const auto& p : out) {
      if (p.hi == LinearForm::one()) top = &p;
      if (p.lo.is_zero()) bottom = &p;
    }
    if (top != nullptr && bottom != nullptr && top != bottom) return to_arc(*top, *bottom);
  }
  throw Error("intersection of circle intervals is not a single arc");
}

}  // namespace sturmian
