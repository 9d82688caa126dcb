#include "sturmian/digit_word.hpp"

#include <charconv>

#include "sturmian/errors.hpp"

namespace sturmian {

DigitWord DigitWord::prefix(std::size_t k) const {
  if (k > digits_.size()) throw DomainError("prefix longer than the digit word");
  return DigitWord({digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(k)});
}

std::string DigitWord::label() const {
  bool small = true;
  for (auto d : digits_) small = small && d < 10;
  std::string out;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (!small && i > 0) out += '.';
    out += std::to_string(digits_[i]);
  }
  return out;
}

DigitWord parse_digit_word(std::string_view text) {
  std::vector<std::uint64_t> digits;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw DomainError("bad digit word: " + std::string(text));
      digits.push_back(static_cast<std::uint64_t>(c - '0'));
    }
    return DigitWord(std::move(digits));
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const auto item = text.substr(start, end - start);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      throw DomainError("bad digit word: " + std::string(text));
    }
    digits.push_back(v);
    start = end + 1;
  }
  return DigitWord(std::move(digits));
}

void validate(const DigitWord& x, const Angle& angle) {
  for (std::size_t j = 1; j <= x.size(); ++j) {
    const auto a = angle.digit(j);
    if (x[j] > a) {
      throw ConstraintViolation(j, "x_" + std::to_string(j) + " = " + std::to_string(x[j]) +
                                       " exceeds a_" + std::to_string(j) + " = " +
                                       std::to_string(a));
    }
    if (j == 1 && x[j] == 0) throw ConstraintViolation(1, "x_1 = 0");
    if (j > 1 && x[j] == 0 && x[j - 1] != angle.digit(j - 1)) {
      throw ConstraintViolation(j, "x_" + std::to_string(j) + " = 0 after a non-maximal digit");
    }
  }
}

bool is_valid(const DigitWord& x, const Angle& angle) {
  try {
    validate(x, angle);
    return true;
  } catch (const ConstraintViolation&) {
    return false;
  }
}

Integer ostrowski_decode(const DigitWord& x, const Angle& angle) {
  Integer sum = 0;
  for (std::size_t j = 1; j <= x.size(); ++j) sum += x[j] * angle.q(static_cast<long>(j) - 1);
  return sum;
}

namespace {

void extend(std::vector<std::uint64_t>& cur, std::size_t k, const Angle& angle,
            std::vector<DigitWord>& out) {
  const std::size_t j = cur.size() + 1;
  if (cur.size() == k) {
    out.emplace_back(cur);
    return;
  }
  const auto a = angle.digit(j);
  const bool zero_ok = j > 1 && cur.back() == angle.digit(j - 1);
  for (std::uint64_t d = zero_ok ? 0 : 1; d <= a; ++d) {
    cur.push_back(d);
    extend(cur, k, angle, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<DigitWord> digit_language(std::size_t k, const Angle& angle) {
  std::vector<DigitWord> out;
  std::vector<std::uint64_t> cur;
  extend(cur, k, angle, out);
  return out;
}

DigitWord extremal_point(ExtremalPoint which, std::size_t length, const Angle& angle) {
  std::vector<std::uint64_t> digits;
  for (std::size_t j = 1; j <= length; ++j) {
    const auto a = angle.digit(j);
    switch (which) {
      case ExtremalPoint::b:
        digits.push_back(a);
        break;
      case ExtremalPoint::c:
        digits.push_back(j == 1 ? 1 : (j % 2 == 0 ? a : 0));
        break;
      case ExtremalPoint::d:
        digits.push_back(j % 2 == 1 ? a : 0);
        break;
    }
  }
  return DigitWord(std::move(digits));
}

}  // namespace sturmian
