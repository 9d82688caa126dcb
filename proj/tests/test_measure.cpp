#include <doctest.h>

#include <map>

#include "oracle.hpp"
#include "sturmian/coding.hpp"
#include "sturmian/measure.hpp"
#include "sturmian/rates.hpp"
#include "sturmian/verify.hpp"

using namespace sturmian;
using oracle::HP;

TEST_CASE("transition rows sum to one and path probabilities are |J_u|") {
  for (const auto& na : oracle::test_angles()) {
    Angle angle(na.cf);
    for (std::size_t k = 0; k <= 8; ++k) {
      CHECK(transition_row(k, false, angle).sums_to_one());
      if (k > 0) CHECK(transition_row(k, true, angle).sums_to_one());
    }
    for (std::size_t k = 1; k <= 6; ++k) {
      HP total = 0;
      for (const auto& u : digit_language(k, angle)) {
        const auto p = path_probability(u, angle);
        REQUIRE(p.has_value());
        const auto J = build_J_interval(u, angle);
        CHECK(*p == (J.is_full() ? LinearForm::one() : J.length()));
        total += oracle::value(*p, na.alpha);
      }
      CHECK(oracle::close(total, HP(1)));
    }
  }
}

TEST_CASE("sample_digit covers the row at the extremes of U") {
  Angle s(ContinuedFraction::silver());
  const auto row = transition_row(3, true, s);
  const Integer top = (Integer(1) << 128) - 1;
  CHECK(sample_digit(row, 0, s) == row.first_digit);
  CHECK(sample_digit(row, top, s) == row.last_digit);
}

TEST_CASE("sampled digits follow the row probabilities") {
  Angle angle(ContinuedFraction::periodic({}, {2, 3}));
  std::map<std::uint64_t, int> first;
  const int n = 20000;
  for (int i = 0; i < n; ++i) first[sample_point(angle, 1, 5, static_cast<std::uint64_t>(i))[1]]++;
  const auto row = transition_row(0, false, angle);
  for (std::uint64_t j = row.first_digit; j <= row.last_digit; ++j) {
    const double p = angle.approx(row.numerator(j)) / angle.approx(row.denominator);
    CHECK(std::abs(first[j] / double(n) - p) < 0.02);
  }
}

TEST_CASE("samples are valid, seeded and reproducible") {
  Angle g(ContinuedFraction::golden());
  const auto x = sample_point(g, 30, 9, 4);
  CHECK(x.size() == 30);
  CHECK(is_valid(x, g));
  CHECK(sample_point(g, 30, 9, 4) == x);
  CHECK_FALSE(sample_point(g, 30, 10, 4) == x);
  CHECK_FALSE(sample_point(g, 30, 9, 5) == x);
}

TEST_CASE("serial and parallel empirical rates agree") {
  Angle g(ContinuedFraction::golden());
  const auto a = empirical_rates(g, 20, 64, 3, Execution::serial);
  const auto b = empirical_rates(g, 20, 64, 3, Execution::parallel);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].digits == b.samples[i].digits);
    CHECK(a.samples[i].estimate.lower == b.samples[i].estimate.lower);
  }
  CHECK(a.median_lower == b.median_lower);
  CHECK(a.median_upper == b.median_upper);
  CHECK(a.bound_violations == 0);
}

TEST_CASE("rate constants: closed-form limits") {
  Angle g(ContinuedFraction::golden());
  const auto rc = rate_constants(g, 30);
  REQUIRE(rc.limits.has_value());
  const HP phi = (1 + sqrt(HP(5))) / 2;
  CHECK(oracle::close(rc.limits->r1, phi, HP("1e-60")));
  CHECK(oracle::close(rc.limits->r0, (3 - sqrt(HP(5))) / 2, HP("1e-60")));
  CHECK(abs(to_high_precision(rc.r0_estimate) - rc.limits->r0) < HP("1e-6"));
  CHECK(abs(to_high_precision(rc.r1_estimate) - rc.limits->r1) < HP("1e-6"));
  CHECK(rc.chain_holds());
  CHECK(rc.M == 1);

  Angle s(ContinuedFraction::silver());
  const auto rs = rate_constants(s, 30);
  CHECK(oracle::close(rs.limits->r1, 1 + sqrt(HP(2)), HP("1e-60")));
  CHECK(oracle::close(rs.limits->r0, 1 - 1 / sqrt(HP(2)), HP("1e-60")));
  CHECK(rs.chain_holds());
}

TEST_CASE("rate constants on a finite schedule use estimates") {
  Angle a(ContinuedFraction::linear_schedule(50));
  const auto rc = rate_constants(a, 40);
  CHECK_FALSE(rc.limits.has_value());
  CHECK_FALSE(rc.M_exact);
  CHECK(rc.M == 41);
}

TEST_CASE("verification suites pass and catch the corrupted eta") {
  Angle g(ContinuedFraction::golden());
  VerifyConfig c;
  c.max_length = 80;
  c.jump_depth = 8;
  c.points = 20;
  c.extremal_depth = 12;
  c.coding_depth = 6;
  c.measure_depth = 5;
  CHECK(verify_all(g, c).passed());
  c.corrupt_eta = true;
  const auto bad = verify_all(g, c);
  CHECK_FALSE(bad.passed());
  for (const auto& s : bad.suites) {
    if (!s.passed()) CHECK(s.counterexample.has_value());
  }
}
