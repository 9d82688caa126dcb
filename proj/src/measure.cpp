#include "sturmian/measure.hpp"

#include <algorithm>

#include "sturmian/errors.hpp"
#include "sturmian/rng.hpp"

namespace sturmian {

LinearForm TransitionRow::numerator(std::uint64_t j) const {
  if (j < first_digit || j > last_digit) return LinearForm::zero();
  return j == last_digit ? last : small;
}

bool TransitionRow::sums_to_one() const {
  return small * Integer(last_digit - first_digit) + last == denominator;
}

TransitionRow transition_row(std::size_t k, bool after_max, const Angle& angle,
                             const EtaSequence& eta) {
  if (k == 0 && after_max) throw DomainError("the initial row has no context");
  const auto kk = static_cast<long>(k);
  TransitionRow row;
  row.k = k;
  row.after_max = after_max;
  row.first_digit = after_max ? 0 : 1;
  row.last_digit = angle.digit(k + 1);
  row.small = eta(kk);
  row.last = eta(kk) + eta(kk + 1);
  row.denominator = after_max ? eta(kk - 1) + eta(kk) : eta(kk - 1);
  return row;
}

TransitionRow transition_row(std::size_t k, bool after_max, const Angle& angle) {
  return transition_row(k, after_max, angle, [&angle](long i) { return angle.eta(i); });
}

std::optional<LinearForm> path_probability(const DigitWord& u, const Angle& angle,
                                           const EtaSequence& eta) {
  validate(u, angle);
  if (u.empty()) return LinearForm::one();
  LinearForm carried = LinearForm::one();
  LinearForm numerator;
  for (std::size_t i = 1; i <= u.size(); ++i) {
    const bool after_max = i > 1 && u[i - 1] == angle.digit(i - 1);
    const auto row = transition_row(i - 1, after_max, angle, eta);
    if (row.denominator != carried) return std::nullopt;
    numerator = row.numerator(u[i]);
    carried = numerator;
  }
  return numerator;
}

std::optional<LinearForm> path_probability(const DigitWord& u, const Angle& angle) {
  return path_probability(u, angle, [&angle](long i) { return angle.eta(i); });
}

std::uint64_t sample_digit(const TransitionRow& row, const Integer& uniform128, const Angle& angle) {
  // t = floor(U * den / (2^128 * small)), capped at the number of small digits.
  const std::uint64_t smalls = row.last_digit - row.first_digit;
  const LinearForm num = row.denominator * uniform128;
  const LinearForm den = row.small * (Integer(1) << 128);
  const Integer t = angle.floor_ratio(num, den);
  if (t >= smalls) return row.last_digit;
  return row.first_digit + t.convert_to<std::uint64_t>();
}

DigitWord sample_point(const Angle& angle, std::size_t K, std::uint64_t seed, std::uint64_t index) {
  const auto key = Philox4x32::key_from_seed(seed);
  DigitWord out;
  for (std::size_t k = 0; k < K; ++k) {
    const bool after_max = k > 0 && out[k] == angle.digit(k);
    const auto row = transition_row(k, after_max, angle);
    const auto block = Philox4x32::block(
        {static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
         static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(std::uint64_t{k} >> 32)},
        key);
    Integer u = 0;
    for (auto w : block) u = (u << 32) | w;
    out.push_back(sample_digit(row, u, angle));
  }
  return out;
}

namespace {

Rational median(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return (v[n / 2 - 1] + v[n / 2]) / 2;
}

}  // namespace

EmpiricalSummary empirical_rates(const Angle& angle, std::size_t K, std::size_t n,
                                 std::uint64_t seed, Execution exec, double eps) {
  if (K < 2) throw DomainError("empirical rates need depth K >= 2");
  if (n == 0) throw DomainError("empirical rates need at least one sample");
  // Extend the shared table before the workers start reading it.
  angle.q(static_cast<long>(K) + 2);
  angle.eta(static_cast<long>(K) + 2);

  EmpiricalSummary s;
  s.depth = K;
  s.seed = seed;
  s.eps = eps;
  s.samples.resize(n);
  auto run = [&](std::size_t i) {
    auto& r = s.samples[i];
    r.index = i;
    r.digits = sample_point(angle, K + 1, seed, i);
    const auto profile = jumps_by_formula(r.digits, K, angle);
    r.bounds_ok = !profile.bound_violation().has_value();
    r.estimate = rate_estimates(profile);
  };
  if (exec == Execution::parallel) {
    const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < count; ++i) run(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) run(i);
  }

  const auto rc = rate_constants(angle, K);
  s.r0_target = rc.r0_value();
  s.r1_target = rc.r1_value();
  const HighPrecision e(eps);
  std::vector<Rational> lowers, uppers;
  std::size_t lower_in = 0, upper_in = 0;
  for (const auto& r : s.samples) {
    lowers.push_back(r.estimate.lower);
    uppers.push_back(r.estimate.upper);
    if (abs(to_high_precision(r.estimate.lower) - s.r0_target) <= e) ++lower_in;
    if (abs(to_high_precision(r.estimate.upper) - s.r1_target) <= e) ++upper_in;
    if (!r.bounds_ok) ++s.bound_violations;
  }
  s.median_lower = median(std::move(lowers));
  s.median_upper = median(std::move(uppers));
  s.fraction_lower_within = static_cast<double>(lower_in) / static_cast<double>(n);
  s.fraction_upper_within = static_cast<double>(upper_in) / static_cast<double>(n);
  return s;
}

}  // namespace sturmian
