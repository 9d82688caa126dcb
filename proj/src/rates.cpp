#include "sturmian/rates.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "sturmian/errors.hpp"

namespace sturmian {

namespace {

const HighPrecision& slack() {
  static const HighPrecision s("1e-60");
  return s;
}

Rational tolerance(double tol) { return Rational(boost::multiprecision::cpp_rational(tol)); }

bool within(const Rational& x, const Rational& y, const Rational& tol) {
  return abs(x - y) <= tol;
}

}  // namespace

std::string to_decimal(const HighPrecision& v, int significant) {
  std::ostringstream os;
  os << std::setprecision(significant) << v;
  return os.str();
}

HighPrecision golden_ratio() { return (1 + sqrt(HighPrecision(5))) / 2; }

HighPrecision to_high_precision(const Rational& v) {
  return HighPrecision(numerator(v)) / HighPrecision(denominator(v));
}

RateEstimate rate_estimates(const ReturnProfile& profile, double tol) {
  const std::size_t K = profile.depth();
  if (profile.r.size() < 3) throw DomainError("rate estimates need depth K >= 2");
  RateEstimate e;
  e.window_begin = K / 2;
  e.window_end = K;
  e.lower = profile.lower_ratio(e.window_begin);
  e.upper = profile.upper_ratio(e.window_begin);
  for (std::size_t k = e.window_begin + 1; k <= K; ++k) {
    e.lower = std::min(e.lower, profile.lower_ratio(k));
    e.upper = std::max(e.upper, profile.upper_ratio(k));
  }
  e.lower_last = profile.lower_ratio(K);
  e.upper_last = profile.upper_ratio(K);
  const Rational t = tolerance(tol);
  e.lower_converged = within(e.lower, e.lower_last, t);
  e.upper_converged = within(e.upper, e.upper_last, t);
  return e;
}

HighPrecision RateConstants::r0_value() const {
  return limits ? limits->r0 : to_high_precision(r0_estimate);
}

HighPrecision RateConstants::r1_value() const {
  return limits ? limits->r1 : to_high_precision(r1_estimate);
}

namespace {

/// Positive root of [b_0; b_1, ..., b_{p-1}, x] = x.
HighPrecision periodic_fixed_point(const std::vector<std::uint64_t>& b) {
  // h_n / k_n convergents of [b_0; b_1, ...].
  Integer h_prev = 1, h = b[0], k_prev = 0, k = 1;
  for (std::size_t i = 1; i < b.size(); ++i) {
    Integer hn = b[i] * h + h_prev;
    Integer kn = b[i] * k + k_prev;
    h_prev = h;
    h = hn;
    k_prev = k;
    k = kn;
  }
  // k x^2 + (k_prev - h) x - h_prev = 0
  const HighPrecision A(k), B(k_prev - h), C(-h_prev);
  return (-B + sqrt(B * B - 4 * A * C)) / (2 * A);
}

/// [0; b_0, b_1, ...] with b repeating, by backward iteration to a fixed point.
HighPrecision periodic_tail(const std::vector<std::uint64_t>& b) {
  HighPrecision x = 0;
  for (int round = 0; round < 400; ++round) {
    for (auto it = b.rbegin(); it != b.rend(); ++it) x = 1 / (HighPrecision(*it) + x);
  }
  return x;
}

}  // namespace

RateConstants rate_constants(const Angle& angle, std::size_t K, double tol) {
  if (K < 2) throw DomainError("rate constants need depth K >= 2");
  RateConstants rc;
  rc.depth = K;
  const auto& cf = angle.cf();

  for (std::size_t k = 1; k <= K + 1; ++k) rc.M = std::max(rc.M, angle.digit(k));
  if (cf.is_periodic()) {
    rc.M = *std::max_element(cf.period().begin(), cf.period().end());
    rc.M_exact = true;
  }

  const std::size_t begin = K / 2;
  auto r0_at = [&](std::size_t k) {
    const auto kk = static_cast<long>(k);
    return Rational(angle.q(kk), angle.q(kk + 1) + angle.q(kk) - 1);
  };
  auto r1_at = [&](std::size_t k) {
    const auto kk = static_cast<long>(k);
    return Rational(angle.q(kk + 1), angle.q(kk));
  };
  rc.r0_estimate = r0_at(begin);
  rc.r1_estimate = r1_at(begin);
  for (std::size_t k = begin + 1; k <= K; ++k) {
    rc.r0_estimate = std::min(rc.r0_estimate, r0_at(k));
    rc.r1_estimate = std::max(rc.r1_estimate, r1_at(k));
  }
  rc.r0_last = r0_at(K);
  rc.r1_last = r1_at(K);
  const Rational t = tolerance(tol);
  rc.r0_converged = within(rc.r0_estimate, rc.r0_last, t);
  rc.r1_converged = within(rc.r1_estimate, rc.r1_last, t);

  if (cf.is_periodic()) {
    const auto& c = cf.period();
    const std::size_t p = c.size();
    RateConstants::Limits lim;
    bool first = true;
    for (std::size_t phase = 0; phase < p; ++phase) {
      std::vector<std::uint64_t> b(p);
      for (std::size_t i = 0; i < p; ++i) b[i] = c[(phase + p - i) % p];
      const HighPrecision psi = periodic_fixed_point(b);
      const HighPrecision phi = periodic_tail(b);
      const HighPrecision r0 = phi / (1 + phi);
      if (first || psi > lim.r1) lim.r1 = psi;
      if (first || r0 < lim.r0) lim.r0 = r0;
      first = false;
    }
    rc.limits = lim;
    rc.identity_error = abs(lim.r1 - (1 / lim.r0 - 1));
  }

  const HighPrecision r0 = rc.r0_value();
  const HighPrecision r1 = rc.r1_value();
  const HighPrecision g = golden_ratio();
  const HighPrecision M(rc.M);
  rc.lower_bound = 1 / (M + 2) <= r0 + slack();
  rc.r0_below_golden = r0 <= 1 / (g * g) + slack();
  rc.r1_above_golden = g <= r1 + slack();
  rc.upper_bound = r1 <= M + 1 + slack();
  return rc;
}

}  // namespace sturmian
