#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "sturmian/decimal.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/packed_bits.hpp"
#include "sturmian/rng.hpp"

using namespace sturmian;
using oracle::HP;

TEST_CASE("convergents of the golden angle are Fibonacci numbers") {
  Angle g(ContinuedFraction::golden());
  CHECK(g.q(-1) == 0);
  CHECK(g.q(0) == 1);
  Integer a = 1, b = 1;
  for (long k = 1; k <= 90; ++k) {
    CHECK(g.q(k) == b);
    const Integer c = a + b;
    a = b;
    b = c;
  }
  CHECK(g.p(1) == 1);
  CHECK(g.p(2) == 1);
  CHECK(g.p(3) == 2);
}

TEST_CASE("p_k q_{k-1} - p_{k-1} q_k alternates") {
  for (const auto& na : oracle::test_angles()) {
    Angle angle(na.cf);
    for (long k = 0; k <= 60; ++k) {
      const auto c = angle.convergent(k);
      const auto d = angle.convergent(k - 1);
      CHECK(c.p * d.q - d.p * c.q == (k % 2 == 0 ? -1 : 1));
    }
  }
}

TEST_CASE("finite providers stop at their depth") {
  auto cf = ContinuedFraction::finite({1, 2, 3});
  CHECK(cf.has_digit(3));
  CHECK_FALSE(cf.has_digit(4));
  CHECK_THROWS_AS(cf.digit(4), InsufficientPrecision);
  CHECK(ContinuedFraction::linear_schedule(5).digit(5) == 5);
  CHECK(ContinuedFraction::power_schedule(10).digit(10) == 1024);
  CHECK(ContinuedFraction::periodic({2}, {3}).describe() == "[0; 2, (3)]");
}

TEST_CASE("eta matches the closed-form angle and satisfies the gap recurrence") {
  for (const auto& na : oracle::test_angles()) {
    Angle angle(na.cf);
    CHECK(angle.eta(-1) == LinearForm::one());
    CHECK(angle.eta(0) == LinearForm::alpha());
    for (long k = 0; k <= 40; ++k) {
      const HP direct = (k % 2 == 0 ? 1 : -1) * (HP(angle.q(k).str()) * na.alpha - HP(angle.p(k).str()));
      CHECK(oracle::close(oracle::value(angle.eta(k), na.alpha), direct));
      CHECK(direct > 0);
      if (k >= 0) {
        const auto a = Integer(angle.digit(static_cast<std::size_t>(k) + 1));
        CHECK(angle.eta(k + 1) == angle.eta(k - 1) - angle.eta(k) * a);
      }
    }
  }
}

TEST_CASE("sign agrees with 100-digit evaluation near integer multiples") {
  std::mt19937_64 gen(7);
  for (const auto& na : oracle::test_angles()) {
    Angle angle(na.cf);
    for (int t = 0; t < 2000; ++t) {
      const std::int64_t b = static_cast<std::int64_t>(gen() % 2000000000001ULL) - 1000000000000LL;
      const HP ba = HP(b) * na.alpha;
      const auto nearest = static_cast<std::int64_t>(floor(ba + HP(0.5)).convert_to<long long>());
      const std::int64_t a = -nearest + static_cast<std::int64_t>(gen() % 3) - 1;
      const HP v = HP(a) + ba;
      const Sign expect = v > 0 ? Sign::positive : (v < 0 ? Sign::negative : Sign::zero);
      CHECK(angle.sign(LinearForm{a, b}) == expect);
      CHECK(angle.sign_small(a, b) == expect);
    }
    CHECK(angle.sign(LinearForm{}) == Sign::zero);
  }
}

TEST_CASE("sign decides forms far beyond double precision") {
  for (const auto& na : oracle::test_angles()) {
    Angle angle(na.cf);
    // q_k alpha - p_k has sign (-1)^k and magnitude about 1/q_k.
    for (long k = 100; k <= 110; ++k) {
      const auto c = angle.convergent(k);
      CHECK(angle.sign(LinearForm{-c.p, c.q}) == (k % 2 == 0 ? Sign::positive : Sign::negative));
    }
  }
}

TEST_CASE("floor_multiple and frac") {
  for (const auto& na : oracle::test_angles()) {
    Angle angle(na.cf);
    for (std::int64_t m : {0LL, 1LL, 7LL, -7LL, 123456789LL, -98765432123LL, 4503599627370497LL}) {
      const auto expect = floor(HP(m) * na.alpha).convert_to<long long>();
      CHECK(angle.floor_multiple(Integer(m)) == expect);
      CHECK(angle.floor_multiple_small(m) == expect);
    }
    const LinearForm f{Integer(5), Integer(-17)};
    CHECK(oracle::close(oracle::value(angle.frac(f), na.alpha), oracle::frac(oracle::value(f, na.alpha))));
    CHECK(angle.floor_ratio(LinearForm{7, 0}, LinearForm::alpha()) ==
          floor(HP(7) / na.alpha).convert_to<long long>());
  }
}

TEST_CASE("decimal rendering matches 100-digit arithmetic") {
  for (const auto& na : oracle::test_angles()) {
    Angle angle(na.cf);
    for (long k = 0; k <= 30; k += 3) {
      const auto e = angle.eta(k);
      const std::string s = to_decimal(e, angle, 30);
      CHECK(abs(HP(s) - oracle::value(e, na.alpha)) <= abs(oracle::value(e, na.alpha)) * HP("1e-29"));
    }
  }
  Angle g(ContinuedFraction::golden());
  CHECK(to_decimal(LinearForm::alpha(), g, 10) == "0.6180339887");
  CHECK(to_decimal(LinearForm::one(), g, 5) == "1.0000");
  CHECK(to_decimal(Rational(1, 3), 6) == "0.333333");
}

TEST_CASE("Philox4x32-10 known-answer vectors") {
  using C = Philox4x32::Counter;
  CHECK(Philox4x32::block(C{0, 0, 0, 0}, {0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::block(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::block(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("packed bits round trip and extract") {
  std::mt19937 gen(3);
  std::string s;
  for (int i = 0; i < 517; ++i) s.push_back(gen() % 2 ? '1' : '0');
  const auto p = PackedBits::from_string(s);
  CHECK(p.to_string() == s);
  for (std::size_t pos : {0, 1, 63, 64, 100, 450}) {
    for (std::size_t len : {1, 17, 63, 64}) {
      if (pos + len > s.size()) continue;
      const std::uint64_t w = p.extract(pos, len);
      for (std::size_t i = 0; i < len; ++i) CHECK(((w >> i) & 1) == static_cast<std::uint64_t>(s[pos + i] - '0'));
    }
  }
  CHECK(p.substr(10, 40) == s.substr(10, 40));
}
