#include "sturmian/language.hpp"

#include <algorithm>
#include <set>

#include "sturmian/errors.hpp"

namespace sturmian {

PackedBits PackedBits::from_string(std::string_view word) {
  PackedBits out;
  out.reserve(word.size());
  for (char c : word) {
    if (c != '0' && c != '1') throw DomainError("binary words use only '0' and '1'");
    out.push_back(c == '1');
  }
  return out;
}

std::string PackedBits::substr(std::size_t pos, std::size_t len) const {
  std::string s(len, '0');
  for (std::size_t i = 0; i < len; ++i) {
    if ((*this)[pos + i]) s[i] = '1';
  }
  return s;
}

MechanicalPrefix generate_prefix(const Angle& angle, const LinearForm& x0, std::size_t length) {
  const LinearForm one = LinearForm::one();
  if (angle.sign(x0) == Sign::negative || angle.compare(x0, one) >= 0) {
    throw DomainError("orbit origin must lie in [0, 1)");
  }
  MechanicalPrefix out{x0, {}};
  out.bits.reserve(length);
  const Integer bound = Integer(1) << 60;
  if (abs(x0.a) < bound && abs(x0.b) < bound) {
    // pos = c + d alpha in machine integers.
    std::int64_t c = x0.a.convert_to<std::int64_t>();
    std::int64_t d = x0.b.convert_to<std::int64_t>();
    for (std::size_t i = 0; i < length; ++i) {
      out.bits.push_back(angle.sign_small(c - 1, d + 1) != Sign::negative);
      ++d;
      if (angle.sign_small(c - 1, d) != Sign::negative) --c;
    }
    return out;
  }
  const LinearForm threshold = one - LinearForm::alpha();
  LinearForm pos = x0;
  for (std::size_t i = 0; i < length; ++i) {
    out.bits.push_back(angle.compare(pos, threshold) >= 0);
    pos += LinearForm::alpha();
    if (angle.compare(pos, one) >= 0) pos -= one;
  }
  return out;
}

long scale_index(std::size_t n, const Angle& angle) {
  long k = -1;
  while (angle.q(k + 1) <= n) ++k;
  return k;
}

std::size_t language_window(std::size_t n, const Angle& angle) {
  const long k = scale_index(n, angle);
  const Integer w = n + 2 * (angle.q(k + 2) + angle.q(k + 1));
  return w.convert_to<std::size_t>();
}

std::size_t occurrence_window(std::size_t n, const Angle& angle) {
  const long k = scale_index(n, angle);
  const Integer w = n + angle.q(k + 1) + 2 * (angle.q(k + 3) + angle.q(k + 2));
  return w.convert_to<std::size_t>();
}

namespace {

std::string factor_key(const PackedBits& bits, std::size_t pos, std::size_t n) {
  std::string key;
  key.reserve(((n + 63) / 64) * 8);
  for (std::size_t off = 0; off < n; off += 64) {
    const std::uint64_t v = bits.extract(pos + off, std::min<std::size_t>(64, n - off));
    key.append(reinterpret_cast<const char*>(&v), sizeof v);
  }
  return key;
}

}  // namespace

std::unordered_map<std::string, FactorOccurrences> factor_occurrences(const PackedBits& bits,
                                                                      std::size_t n,
                                                                      std::size_t window) {
  if (window > bits.size()) throw DomainError("window exceeds the prefix length");
  std::unordered_map<std::string, FactorOccurrences> occ;
  std::unordered_map<std::string, std::uint64_t> last;
  if (window < n) return occ;
  for (std::size_t i = 0; i + n <= window; ++i) {
    std::string key = factor_key(bits, i, n);
    auto [it, fresh] = occ.try_emplace(key);
    auto& o = it->second;
    if (fresh) {
      o.first = i;
    } else {
      const std::uint64_t gap = i - last[key];
      if (o.min_gap == 0 || gap < o.min_gap) o.min_gap = gap;
    }
    ++o.count;
    last[key] = i;
  }
  // Re-key by the readable word.
  std::unordered_map<std::string, FactorOccurrences> out;
  out.reserve(occ.size());
  for (auto& [key, o] : occ) out.emplace(bits.substr(o.first, n), o);
  return out;
}

std::vector<std::string> factors(const PackedBits& bits, std::size_t n, std::size_t window) {
  std::vector<std::string> out;
  for (auto& [word, o] : factor_occurrences(bits, n, window)) out.push_back(word);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> language(std::size_t n, const Angle& angle) {
  const std::size_t window = language_window(n, angle);
  const auto prefix = generate_prefix(angle, window);
  auto words = factors(prefix.bits, n, window);
  if (words.size() != n + 1) {
    throw Error("factor scan found " + std::to_string(words.size()) + " words of length " +
                std::to_string(n) + ", expected " + std::to_string(n + 1));
  }
  return words;
}

std::uint64_t min_occurrence_gap(const PackedBits& bits, std::string_view u, std::size_t window) {
  if (window > bits.size()) throw DomainError("window exceeds the prefix length");
  const std::size_t n = u.size();
  if (n == 0) return window >= 2 ? 1 : 0;
  const auto pattern = PackedBits::from_string(u);
  const std::size_t nblocks = pattern.blocks().size();

  std::uint64_t best = 0;
  bool seen = false;
  std::size_t last = 0;
  for (std::size_t i = 0; i + n <= window; ++i) {
    bool match = true;
    for (std::size_t b = 0; b < nblocks && match; ++b) {
      const std::size_t len = std::min<std::size_t>(64, n - 64 * b);
      match = bits.extract(i + 64 * b, len) == pattern.blocks()[b];
    }
    if (!match) continue;
    if (seen && (best == 0 || i - last < best)) best = i - last;
    seen = true;
    last = i;
  }
  return best;
}

WordOracle::WordOracle(Angle angle) : angle_(std::move(angle)) {}

const PackedBits& WordOracle::prefix(std::size_t length) {
  if (prefix_.size() < length) {
    prefix_ = generate_prefix(angle_, std::max(length, 2 * prefix_.size())).bits;
  }
  return prefix_;
}

std::uint64_t WordOracle::tau(std::string_view u) {
  const std::size_t window = occurrence_window(u.size(), angle_);
  const std::uint64_t gap = min_occurrence_gap(prefix(window), u, window);
  if (gap == 0) {
    // The window holds every factor at this scale at least twice.
    throw DomainError("word " + std::string(u) + " is not in the language");
  }
  return gap;
}

std::uint64_t tau_word_oracle(std::string_view u, const Angle& angle) {
  return WordOracle(angle).tau(u);
}

}  // namespace sturmian
