#include "sturmian/rotation.hpp"

#include <algorithm>
#include <numeric>

#include "sturmian/errors.hpp"

namespace sturmian {

CylinderTracker::CylinderTracker(Angle angle) : angle_(std::move(angle)) {}

std::int64_t CylinderTracker::cut_constant(std::uint64_t i) const {
  if (i >= (std::uint64_t{1} << 52)) throw CapExceeded(std::uint64_t{1} << 52);
  return i == 0 ? 0 : -angle_.floor_multiple_small(-static_cast<std::int64_t>(i));
}

LinearForm CylinderTracker::cut(std::uint64_t i) const {
  return {Integer(cut_constant(i)), -Integer(i)};
}

bool CylinderTracker::cut_less(std::uint64_t i, std::int64_t ci, std::uint64_t j,
                               std::int64_t cj) const {
  return angle_.sign_small(ci - cj, static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i)) ==
         Sign::negative;
}

bool CylinderTracker::symbol(std::uint64_t i) const {
  // x_i + n alpha = {(n - i) alpha}; s_m = floor((m + 1) alpha) - floor(m alpha).
  const auto m = static_cast<std::int64_t>(n_) - static_cast<std::int64_t>(i);
  return angle_.floor_multiple_small(m + 1) != angle_.floor_multiple_small(m);
}

bool CylinderTracker::push(bool bit) {
  const std::uint64_t m = n_ + 1;
  const std::int64_t cm = cut_constant(m);
  bool split = full_;
  if (!split) {
    const bool after_left = cut_less(l_, cl_, m, cm);
    const bool before_right = cut_less(m, cm, r_, cr_);
    split = cut_less(l_, cl_, r_, cr_) ? (after_left && before_right) : (after_left || before_right);
  }
  if (split) {
    // [x_l, x_m) codes 0 and [x_m, x_r) codes 1, since x_m + n alpha = 1 - alpha.
    if (bit) {
      l_ = m;
      cl_ = cm;
    } else {
      r_ = m;
      cr_ = cm;
    }
    full_ = false;
  } else if (symbol(l_) != bit) {
    return false;
  }
  changed_ = split;
  ++n_;
  return true;
}

CircleInterval CylinderTracker::interval() const {
  if (full_) return CircleInterval::full();
  return CircleInterval::between_cuts(angle_, l_, r_);
}

LinearForm CylinderTracker::length() const {
  if (full_) return LinearForm::one();
  LinearForm len = cut(r_) - cut(l_);
  if (!cut_less(l_, cl_, r_, cr_)) len += LinearForm::one();
  return len;
}

CircleInterval cylinder_interval(std::string_view word, const Angle& angle) {
  CylinderTracker tracker(angle);
  for (char c : word) {
    if (c != '0' && c != '1') throw DomainError("binary words use only '0' and '1'");
    if (!tracker.push(c == '1')) return CircleInterval::empty();
  }
  return tracker.interval();
}

KleinRule::KleinRule(Angle angle) : angle_(angle) {
  eta_ = [a = std::move(angle)](long k) { return a.eta(k); };
}

KleinRule::KleinRule(Angle angle, EtaSequence eta) : angle_(std::move(angle)), eta_(std::move(eta)) {}

KleinBracket KleinRule::bracket(const LinearForm& length) const {
  if (angle_.sign(length) != Sign::positive) throw DomainError("interval length must be positive");
  if (angle_.compare(length, LinearForm::one()) > 0) throw DomainError("interval longer than 1");
  long k = -1;
  while (angle_.compare(eta_(k + 1), length) >= 0) {
    ++k;
    if (k > 100000) throw Error("Klein bracket search did not terminate");
  }
  return {k, angle_.q(k + 1)};
}

Integer KleinRule::tau(const CircleInterval& interval) const {
  if (interval.is_empty()) throw DomainError("return time of an empty interval");
  return bracket(interval.length()).tau;
}

Integer tau_interval_formula(const CircleInterval& interval, const Angle& angle) {
  return KleinRule(angle).tau(interval);
}

std::uint64_t tau_interval_bruteforce(const CircleInterval& interval, const Angle& angle,
                                      std::optional<std::uint64_t> cap) {
  if (interval.is_empty()) throw DomainError("return time of an empty interval");
  const auto& len = interval.length();
  std::uint64_t limit;
  if (cap) {
    limit = *cap;
  } else {
    const auto b = KleinRule(angle).bracket(len);
    limit = angle.q(b.k + 2).convert_to<std::uint64_t>();
  }
  // delta_k = {k alpha}; F^k(I) meets I iff delta_k < |I| or 1 - delta_k < |I|.
  const Integer small = Integer(1) << 52;
  if (abs(len.a) < small && abs(len.b) < small && limit < (std::uint64_t{1} << 52)) {
    // delta_k = k alpha - f as machine integers.
    const auto la = len.a.convert_to<std::int64_t>();
    const auto lb = len.b.convert_to<std::int64_t>();
    std::int64_t f = 0;
    for (std::uint64_t k = 1; k <= limit; ++k) {
      const auto kk = static_cast<std::int64_t>(k);
      if (angle.sign_small(-(f + 1), kk) != Sign::negative) ++f;
      if (angle.sign_small(la + f, lb - kk) == Sign::positive ||
          angle.sign_small(la - 1 - f, lb + kk) == Sign::positive) {
        return k;
      }
    }
    throw CapExceeded(limit);
  }
  LinearForm delta = LinearForm::zero();
  const LinearForm one = LinearForm::one();
  for (std::uint64_t k = 1; k <= limit; ++k) {
    delta += LinearForm::alpha();
    if (angle.compare(delta, one) >= 0) delta -= one;
    if (angle.less(delta, len) || angle.less(one - delta, len)) return k;
  }
  throw CapExceeded(limit);
}

ReturnRecords::ReturnRecords(const Angle& angle, std::uint64_t horizon)
    : angle_(angle), horizon_(horizon) {
  LinearForm delta = LinearForm::zero();
  const LinearForm one = LinearForm::one();
  for (std::uint64_t k = 1; k <= horizon; ++k) {
    delta += LinearForm::alpha();
    if (angle.compare(delta, one) >= 0) delta -= one;
    LinearForm dist = angle.less(delta, one - delta) ? delta : one - delta;
    if (records_.empty() || angle.less(dist, records_.back().distance)) {
      records_.push_back({k, std::move(dist)});
    }
  }
}

std::uint64_t ReturnRecords::first_return(const LinearForm& length) const {
  for (const auto& r : records_) {
    if (angle_.less(r.distance, length)) return r.k;
  }
  throw CapExceeded(horizon_);
}

std::vector<LinearForm> cut_points(std::size_t n, const Angle& angle) {
  std::vector<LinearForm> out;
  out.reserve(n + 1);
  out.push_back(LinearForm::zero());
  for (std::size_t i = 1; i <= n; ++i) {
    LinearForm next = out.back() - LinearForm::alpha();
    if (angle.sign(next) == Sign::negative) next += LinearForm::one();
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<Cell> partition(std::size_t n, const Angle& angle) {
  if (n == 0) return {{"", CircleInterval::full()}};

  const auto cuts = cut_points(n, angle);
  std::vector<std::size_t> order(n + 1);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return angle.less(cuts[i], cuts[j]); });

  // Two-sided coding s_m = [{m alpha} >= 1 - alpha] for m in [-n, n-1]; the
  // itinerary of x_i = {-i alpha} is s_{-i}, ..., s_{-i+n-1}.
  const LinearForm threshold = LinearForm::one() - LinearForm::alpha();
  std::string coding(2 * n, '0');
  for (std::size_t j = 0; j < 2 * n; ++j) {
    const long m = static_cast<long>(j) - static_cast<long>(n);
    const LinearForm point = m <= 0 ? cuts[static_cast<std::size_t>(-m)]
                                    : angle.frac_multiple(Integer(m));
    if (angle.compare(point, threshold) >= 0) coding[j] = '1';
  }

  std::vector<Cell> cells;
  cells.reserve(n + 1);
  for (std::size_t c = 0; c <= n; ++c) {
    const std::size_t i = order[c];
    const std::size_t next = c < n ? order[c + 1] : 0;
    const LinearForm right = c < n ? cuts[next] : LinearForm::zero();
    std::string word = coding.substr(n - i, n);
    cells.push_back({std::move(word), CircleInterval::arc(angle, cuts[i], right, i, next)});
  }
  return cells;
}

}  // namespace sturmian
