#include "sturmian/angle.hpp"

#include <atomic>
#include <cmath>
#include <deque>
#include <mutex>

#include "sturmian/errors.hpp"

namespace sturmian {

std::string LinearForm::to_string() const {
  auto alpha_term = [](const Integer& c) {
    if (c == 1) return std::string("alpha");
    return c.str() + "*alpha";
  };
  if (b.is_zero()) return a.str();
  if (a.is_zero()) return b < 0 ? "-" + alpha_term(-b) : alpha_term(b);
  return a.str() + (b < 0 ? " - " + alpha_term(-b) : " + " + alpha_term(b));
}

namespace detail {

struct AngleState {
  explicit AngleState(ContinuedFraction c) : cf(std::move(c)) {
    rows.push_back({1, 0});  // k = -1
    rows.push_back({0, 1});  // k = 0
  }

  ContinuedFraction cf;
  std::mutex mu;
  std::deque<Convergent> rows;  // rows[k + 1]
  std::atomic<std::size_t> consumed{0};

  // |alpha - alpha_d| <= alpha_err, from the convergent at filter_depth.
  double alpha_d = 0.5;
  double alpha_err = 0.5;
  long filter_depth = 0;
};

}  // namespace detail

namespace {

Integer floor_div(const Integer& n, const Integer& d) {
  Integer q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

/// Largest m with ok(m), for ok true up to some threshold and false above it.
template <class Pred>
Integer largest_satisfying(const Integer& guess, Pred ok) {
  Integer lo, hi;
  Integer step = 1;
  if (ok(guess)) {
    lo = guess;
    hi = guess + 1;
    while (ok(hi)) {
      lo = hi;
      step *= 2;
      hi = guess + step;
    }
  } else {
    hi = guess;
    lo = guess - 1;
    while (!ok(lo)) {
      hi = lo;
      step *= 2;
      lo = guess - step;
    }
  }
  while (hi - lo > 1) {
    Integer mid = lo + (hi - lo) / 2;
    if (ok(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

Sign sign_of_int(const Integer& v) {
  if (v.is_zero()) return Sign::zero;
  return v < 0 ? Sign::negative : Sign::positive;
}

}  // namespace

Angle::Angle(ContinuedFraction cf) : state_(std::make_shared<detail::AngleState>(std::move(cf))) {
  // Filter depth: first k with q_k q_{k-1} >= 2^64, or the provider depth.
  const Integer limit = Integer(1) << 64;
  long d = 0;
  while (state_->cf.has_digit(static_cast<std::size_t>(d + 1))) {
    ++d;
    const auto cur = convergent(d);
    const auto prev = convergent(d - 1);
    if (cur.q * prev.q >= limit) break;
  }
  state_->filter_depth = d;
  if (d >= 1) {
    const auto c = convergent(d);
    const auto prev = convergent(d - 1);
    const Integer scaled = (c.p << 64) / c.q;
    state_->alpha_d = std::ldexp(scaled.convert_to<double>(), -64);
    const double qq = (c.q * prev.q).convert_to<double>();
    state_->alpha_err = (1.0 / qq) * (1.0 + 0x1p-40) + 0x1p-51;
  }
}

const ContinuedFraction& Angle::cf() const { return state_->cf; }

void Angle::note_depth(std::size_t k) const {
  auto& c = state_->consumed;
  std::size_t cur = c.load(std::memory_order_relaxed);
  while (k > cur && !c.compare_exchange_weak(cur, k, std::memory_order_relaxed)) {
  }
}

std::uint64_t Angle::digit(std::size_t k) const {
  auto v = state_->cf.digit(k);
  note_depth(k);
  return v;
}

std::size_t Angle::depth_consumed() const { return state_->consumed.load(); }

Convergent Angle::convergent(long k) const {
  if (k < -1) throw DomainError("convergents are indexed from -1");
  std::lock_guard lock(state_->mu);
  auto& rows = state_->rows;
  while (static_cast<long>(rows.size()) < k + 2) {
    const auto next = static_cast<long>(rows.size()) - 1;  // index being added
    const std::uint64_t a = digit(static_cast<std::size_t>(next));
    const auto& r1 = rows[rows.size() - 1];
    const auto& r2 = rows[rows.size() - 2];
    rows.push_back({a * r1.p + r2.p, a * r1.q + r2.q});
  }
  return rows[static_cast<std::size_t>(k + 1)];
}

LinearForm Angle::eta(long k) const {
  const auto c = convergent(k);
  // (-1)^k (q_k alpha - p_k)
  if ((k % 2 + 2) % 2 == 0) return {-c.p, c.q};
  return {c.p, -c.q};
}

Sign Angle::sign(const LinearForm& f) const {
  if (f.b.is_zero()) return sign_of_int(f.a);
  if (f.a.is_zero()) return sign_of_int(f.b);
  if (f.a.sign() == f.b.sign()) return sign_of_int(f.a);  // alpha > 0

  const auto bits = std::max(msb(abs(f.a)), msb(abs(f.b)));
  if (bits < 1000) {
    const double ad = f.a.convert_to<double>();
    const double bd = f.b.convert_to<double>();
    const double v = ad + bd * state_->alpha_d;
    const double bound =
        std::fabs(bd) * state_->alpha_err + (std::fabs(ad) + std::fabs(bd)) * 0x1p-50;
    note_depth(static_cast<std::size_t>(state_->filter_depth));
    if (v > bound) return Sign::positive;
    if (v < -bound) return Sign::negative;
  }
  return sign_exact(f);
}

Sign Angle::sign_small(std::int64_t a, std::int64_t b) const {
  constexpr std::int64_t limit = std::int64_t{1} << 52;
  if (a > -limit && a < limit && b > -limit && b < limit) {
    if (b == 0 || a == 0 || (a > 0) == (b > 0)) {
      const std::int64_t s = a != 0 ? a : b;
      return s > 0 ? Sign::positive : (s < 0 ? Sign::negative : Sign::zero);
    }
    const double ad = static_cast<double>(a);
    const double bd = static_cast<double>(b);
    const double v = ad + bd * state_->alpha_d;
    const double bound =
        std::fabs(bd) * state_->alpha_err + (std::fabs(ad) + std::fabs(bd)) * 0x1p-50;
    if (v > bound) return Sign::positive;
    if (v < -bound) return Sign::negative;
  }
  return sign(LinearForm{Integer(a), Integer(b)});
}

Sign Angle::sign_exact(const LinearForm& f) const {
  // a + b alpha = b (alpha - r) with r = -a/b = n/d, d > 0.
  Integer n = -f.a;
  Integer d = f.b;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  int s = 0;
  for (long k = 0;; ++k) {
    const auto c = convergent(k);
    const Integer lhs = n * c.q;
    const Integer rhs = c.p * d;
    if (k % 2 == 0) {
      if (lhs <= rhs) {  // r <= p_k/q_k < alpha
        s = 1;
        break;
      }
    } else if (lhs >= rhs) {  // alpha < p_k/q_k <= r
      s = -1;
      break;
    }
  }
  if (f.b < 0) s = -s;
  return s > 0 ? Sign::positive : Sign::negative;
}

int Angle::compare(const LinearForm& f, const LinearForm& g) const {
  return static_cast<int>(sign(f - g));
}

Integer Angle::floor_multiple(const Integer& d) const {
  if (d.is_zero()) return 0;
  const auto c = convergent(state_->filter_depth);
  const Integer guess = floor_div(d * c.p, c.q);
  return largest_satisfying(guess, [&](const Integer& m) {
    return sign(LinearForm{-m, d}) != Sign::negative;
  });
}

std::int64_t Angle::floor_multiple_small(std::int64_t m) const {
  if (m >= (std::int64_t{1} << 52) || m <= -(std::int64_t{1} << 52)) {
    return floor_multiple(Integer(m)).convert_to<std::int64_t>();
  }
  auto f = static_cast<std::int64_t>(std::floor(static_cast<double>(m) * state_->alpha_d));
  while (sign_small(-f, m) == Sign::negative) --f;
  while (sign_small(-(f + 1), m) != Sign::negative) ++f;
  return f;
}

LinearForm Angle::frac_multiple(const Integer& i) const { return {-floor_multiple(i), i}; }

LinearForm Angle::frac_position(std::uint64_t i) const { return frac_multiple(-Integer(i)); }

Integer Angle::floor_ratio(const LinearForm& num, const LinearForm& den) const {
  if (sign(den) != Sign::positive) throw DomainError("floor_ratio needs a positive denominator");
  const auto c = convergent(state_->filter_depth);
  const Integer n = num.a * c.q + num.b * c.p;
  const Integer dd = den.a * c.q + den.b * c.p;
  const Integer guess = dd > 0 ? floor_div(n, dd) : Integer(0);
  return largest_satisfying(guess, [&](const Integer& m) {
    return sign(num - den * m) != Sign::negative;
  });
}

LinearForm Angle::frac(const LinearForm& f) const {
  return f - LinearForm::constant(floor_ratio(f, LinearForm::one()));
}

double Angle::approx(const LinearForm& f) const {
  const long double v = f.a.convert_to<long double>() +
                        f.b.convert_to<long double>() * static_cast<long double>(state_->alpha_d);
  return static_cast<double>(v);
}

double Angle::alpha_approx() const { return state_->alpha_d; }

}  // namespace sturmian
