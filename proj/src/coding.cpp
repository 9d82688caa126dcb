#include "sturmian/coding.hpp"

#include "sturmian/errors.hpp"

namespace sturmian {

namespace {

std::uint64_t to_index(const Integer& v) {
  if (v < 0 || v >= (Integer(1) << 52)) throw CapExceeded(std::uint64_t{1} << 52);
  return v.convert_to<std::uint64_t>();
}

}  // namespace

JCursor::JCursor(Angle angle) : angle_(std::move(angle)) {}

JCursor::Pair JCursor::child(std::uint64_t u) const {
  const std::size_t k = depth() + 1;
  const Integer a_k = angle_.digit(k);
  if (k == 1) {
    if (u < a_k) return {Integer(u), Integer(u) - 1};
    return {Integer(0), a_k - 1};
  }
  const Integer Q = angle_.q(static_cast<long>(k) - 1);
  const bool prev_max = word_[k - 1] == angle_.digit(k - 1);
  const Integer a = c_;
  const Integer b = d_;
  if (!prev_max) {
    if (u < a_k) return {u * Q + a, (Integer(u) - 1) * Q + a};
    return {b, (a_k - 1) * Q + a};
  }
  if (u < a_k) return {(Integer(u) + 1) * Q + a, u * Q + a};
  return {b, a_k * Q + a};
}

void JCursor::push(std::uint64_t digit) {
  DigitWord next = word_;
  next.push_back(digit);
  validate(next, angle_);
  const auto p = child(digit);
  c_ = to_index(p.c);
  d_ = to_index(p.d);
  word_ = std::move(next);
}

CircleInterval JCursor::interval() const {
  if (is_full()) return CircleInterval::full();
  return CircleInterval::between_cuts(angle_, left_cut(), right_cut());
}

LinearForm JCursor::length() const {
  const auto k = static_cast<long>(depth());
  if (k == 0) return LinearForm::one();
  if (word_[depth()] < angle_.digit(depth())) return angle_.eta(k - 1);
  return angle_.eta(k - 1) + angle_.eta(k);
}

std::optional<std::uint64_t> JCursor::child_digit(std::uint64_t left, std::uint64_t right) const {
  const std::size_t k = depth() + 1;
  const std::uint64_t a_k = angle_.digit(k);
  const bool full = left == right;
  if (full) {
    if (k == 1 && a_k == 1) return 1;
    return std::nullopt;
  }
  const std::uint64_t c = k % 2 == 1 ? left : right;
  std::optional<std::uint64_t> u;
  if (k == 1) {
    u = c == 0 ? a_k : c;
  } else if (c == d_) {
    u = a_k;
  } else {
    const Integer Q = angle_.q(static_cast<long>(k) - 1);
    const Integer t = Integer(c) - c_;
    if (t < 0 || t % Q != 0) return std::nullopt;
    Integer v = t / Q;
    if (word_[k - 1] == angle_.digit(k - 1)) v -= 1;
    if (v < 0 || v >= a_k) return std::nullopt;
    u = v.convert_to<std::uint64_t>();
  }
  DigitWord next = word_;
  next.push_back(*u);
  if (!is_valid(next, angle_)) return std::nullopt;
  const auto p = child(*u);
  const std::uint64_t pl = k % 2 == 1 ? to_index(p.c) : to_index(p.d);
  const std::uint64_t pr = k % 2 == 1 ? to_index(p.d) : to_index(p.c);
  if (pl != left || pr != right) return std::nullopt;
  return u;
}

CircleInterval build_J_interval(const DigitWord& u, const Angle& angle) {
  JCursor cursor(angle);
  for (auto d : u.digits()) cursor.push(d);
  return cursor.interval();
}

GammaEncoder::GammaEncoder(Angle angle)
    : angle_(angle), tracker_(angle), cursor_(std::move(angle)) {
  emit();
}

void GammaEncoder::emit() {
  while (angle_.cf().has_digit(cursor_.depth() + 1) &&
         angle_.q(static_cast<long>(cursor_.depth()) + 1) - 1 == tracker_.size()) {
    const std::uint64_t l = tracker_.is_full() ? 0 : tracker_.left_cut();
    const std::uint64_t r = tracker_.is_full() ? 0 : tracker_.right_cut();
    const auto u = cursor_.child_digit(l, r);
    if (!u) {
      throw Error("cell at length " + std::to_string(tracker_.size()) +
                  " is not a J interval at depth " + std::to_string(cursor_.depth() + 1));
    }
    cursor_.push(*u);
  }
}

bool GammaEncoder::push(bool bit) {
  if (!tracker_.push(bit)) return false;
  emit();
  return true;
}

DigitWord gamma_encode(std::string_view word, std::size_t k, const Angle& angle) {
  if (angle.q(static_cast<long>(k)) - 1 != word.size()) {
    throw DomainError("word length " + std::to_string(word.size()) + " is not q_" +
                      std::to_string(k) + " - 1");
  }
  GammaEncoder enc(angle);
  for (char c : word) {
    if (c != '0' && c != '1') throw DomainError("binary words use only '0' and '1'");
    if (!enc.push(c == '1')) throw DomainError("word " + std::string(word) + " is not in the language");
  }
  return enc.digits().prefix(k);
}

DigitWord gamma_encode(std::string_view word, const Angle& angle) {
  long k = 0;
  while (angle.q(k + 1) - 1 <= word.size()) ++k;
  if (angle.q(k) - 1 != word.size()) {
    throw DomainError("word length " + std::to_string(word.size()) + " is not of the form q_k - 1");
  }
  return gamma_encode(word, static_cast<std::size_t>(k), angle);
}

}  // namespace sturmian
