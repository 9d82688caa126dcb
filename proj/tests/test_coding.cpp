#include <doctest.h>

#include "oracle.hpp"
#include "sturmian/coding.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/jumps.hpp"
#include "sturmian/language.hpp"
#include "sturmian/rotation.hpp"

using namespace sturmian;

TEST_CASE("digit word parsing and constraints") {
  Angle a(ContinuedFraction::periodic({2}, {3}));
  CHECK(parse_digit_word("2,0,3").digits() == std::vector<std::uint64_t>{2, 0, 3});
  CHECK(parse_digit_word("203") == parse_digit_word("2,0,3"));
  CHECK(is_valid(parse_digit_word("203"), a));
  CHECK_FALSE(is_valid(parse_digit_word("0"), a));   // x_1 = 0
  CHECK_FALSE(is_valid(parse_digit_word("30"), a));  // x_1 > a_1
  CHECK_FALSE(is_valid(parse_digit_word("10"), a));  // zero after a non-maximal digit
  try {
    validate(parse_digit_word("2,1,0"), a);
    FAIL("expected a violation");
  } catch (const ConstraintViolation& e) {
    CHECK(e.index() == 3);
  }
  CHECK(DigitWord({12, 0}).label() == "12.0");
}

TEST_CASE("digit language has q_k words and codes the partition at q_k - 1") {
  for (const auto& na : oracle::test_angles()) {
    Angle angle(na.cf);
    for (std::size_t k = 1; k <= 7; ++k) {
      const auto words = digit_language(k, angle);
      CHECK(words.size() == angle.q(static_cast<long>(k)));
      const auto n = angle.q(static_cast<long>(k)).convert_to<std::size_t>() - 1;
      const auto cells = partition(n, angle);
      std::vector<CircleInterval> js;
      for (const auto& u : words) {
        const auto J = build_J_interval(u, angle);
        js.push_back(J);
        const auto cell = std::find_if(cells.begin(), cells.end(),
                                       [&](const Cell& c) { return c.interval == J; });
        REQUIRE(cell != cells.end());
        CHECK(gamma_encode(cell->word, k, angle) == u);
      }
      for (const auto& cell : cells) {
        CHECK(std::count(js.begin(), js.end(), cell.interval) == 1);
      }
    }
  }
}

TEST_CASE("J lengths are eta_{k-1} or eta_{k-1} + eta_k") {
  Angle angle(ContinuedFraction::periodic({}, {2, 3}));
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto lk = static_cast<long>(k);
    for (const auto& u : digit_language(k, angle)) {
      JCursor cur(angle);
      for (std::size_t j = 1; j <= k; ++j) cur.push(u[j]);
      const auto expect = u[k] < angle.digit(k) ? angle.eta(lk - 1) : angle.eta(lk - 1) + angle.eta(lk);
      CHECK(cur.length() == expect);
      if (!cur.is_full()) CHECK(cur.interval().length() == expect);
    }
  }
}

TEST_CASE("seven cells and J-labels at n = 6 for [0; 2, 3, 3, ...]") {
  Angle angle(ContinuedFraction::periodic({2, 3}, {3}));
  const auto cells = partition(6, angle);
  const std::vector<std::string> words{"001010", "010010", "010100", "010101",
                                       "100101", "101001", "101010"};
  const std::vector<std::string> labels{"20", "21", "22", "23", "11", "12", "13"};
  REQUIRE(cells.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(cells[i].word == words[i]);
    CHECK(gamma_encode(cells[i].word, angle).label() == labels[i]);
    CHECK(build_J_interval(parse_digit_word(labels[i]), angle) == cells[i].interval);
  }
}

TEST_CASE("degenerate gamma depths") {
  Angle g(ContinuedFraction::golden());
  CHECK(gamma_encode("", 0, g).empty());
  CHECK(gamma_encode("", 1, g) == DigitWord({1}));
  CHECK(build_J_interval(DigitWord({1}), g).is_full());
}

TEST_CASE("streaming encoder emits the digits of long prefixes") {
  for (const auto& na : oracle::test_angles()) {
    Angle angle(na.cf);
    const auto prefix = generate_prefix(angle, 3000).to_string();
    GammaEncoder enc(angle);
    std::size_t emitted = 0;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      REQUIRE(enc.push(prefix[i] == '1'));
      if (enc.digits().size() > emitted) {
        emitted = enc.digits().size();
        CHECK(angle.q(static_cast<long>(emitted)) - 1 == i + 1);
        CHECK(gamma_encode(prefix.substr(0, i + 1), emitted, angle) == enc.digits());
      }
    }
    CHECK(is_valid(enc.digits(), angle));
  }
}

TEST_CASE("jump times: formula, definition and Ostrowski sums") {
  for (const auto& na : oracle::test_angles()) {
    Angle angle(na.cf);
    for (const auto& x : digit_language(8, angle)) {
      const auto p = jumps_by_formula(x, 7, angle);
      CHECK_FALSE(p.bound_violation());
      for (std::size_t k = 0; k <= 7; ++k) CHECK(p.r[k] == ostrowski_decode(x.prefix(k + 1), angle));
      JCursor cur(angle);
      for (std::size_t j = 1; j <= 8; ++j) cur.push(x[j]);
      const auto y = cur.interval().is_full() ? LinearForm::zero() : cur.interval().left();
      const auto prefix = generate_prefix(angle, y, definition_prefix_length(7, angle));
      CHECK(jumps_by_definition(prefix.bits, 7, angle) == p);
    }
  }
}

TEST_CASE("extremal points reach the jump bounds") {
  for (const auto& na : oracle::test_angles()) {
    Angle angle(na.cf);
    const std::size_t K = 20;
    const auto b = jumps_by_formula(extremal_point(ExtremalPoint::b, K + 1, angle), K, angle);
    const auto c = jumps_by_formula(extremal_point(ExtremalPoint::c, K + 1, angle), K, angle);
    const auto d = jumps_by_formula(extremal_point(ExtremalPoint::d, K + 1, angle), K, angle);
    for (std::size_t k = 0; k <= K; ++k) {
      const auto lk = static_cast<long>(k);
      CHECK(b.r[k] == angle.q(lk + 1) + angle.q(lk) - 1);
      if (k % 2 == 0) {
        CHECK(c.r[k] == angle.q(lk));
        CHECK(d.r[k] == angle.q(lk + 1));
      }
    }
  }
}
