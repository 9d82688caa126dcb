#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sturmian {

/// Binary sequence packed into 64-bit blocks, bit i at block i/64, position i%64.
class PackedBits {
 public:
  PackedBits() = default;
  static PackedBits from_string(std::string_view word);

  void push_back(bool bit) {
    if (size_ % 64 == 0) blocks_.push_back(0);
    if (bit) blocks_.back() |= std::uint64_t{1} << (size_ % 64);
    ++size_;
  }
  void reserve(std::size_t n) { blocks_.reserve((n + 63) / 64); }

  bool operator[](std::size_t i) const { return (blocks_[i / 64] >> (i % 64)) & 1U; }
  std::size_t size() const noexcept { return size_; }
  const std::vector<std::uint64_t>& blocks() const noexcept { return blocks_; }

  /// Bits [pos, pos + len), len <= 64, as an integer with bit pos at position 0.
  std::uint64_t extract(std::size_t pos, std::size_t len) const {
    const std::size_t block = pos / 64;
    const std::size_t shift = pos % 64;
    std::uint64_t v = blocks_[block] >> shift;
    if (shift != 0 && block + 1 < blocks_.size()) v |= blocks_[block + 1] << (64 - shift);
    return len == 64 ? v : v & ((std::uint64_t{1} << len) - 1);
  }

  std::string substr(std::size_t pos, std::size_t len) const;
  std::string to_string() const { return substr(0, size_); }

  friend bool operator==(const PackedBits&, const PackedBits&) = default;

 private:
  std::vector<std::uint64_t> blocks_;
  std::size_t size_ = 0;
};

}  // namespace sturmian
