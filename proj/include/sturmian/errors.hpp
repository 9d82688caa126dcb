#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sturmian {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A digit provider ran out before a computation could be decided.
class InsufficientPrecision : public Error {
 public:
  explicit InsufficientPrecision(std::size_t required_depth)
      : Error("insufficient precision: continued fraction digit a_" +
              std::to_string(required_depth) + " is beyond the provider depth"),
        required_depth_(required_depth) {}

  std::size_t required_depth() const noexcept { return required_depth_; }

 private:
  std::size_t required_depth_;
};

/// A digit word violates x_1 != 0, x_j <= a_j or (x_{j+1} = 0 => x_j = a_j).
class ConstraintViolation : public Error {
 public:
  ConstraintViolation(std::size_t index, const std::string& what)
      : Error("digit constraint violated at index " + std::to_string(index) + ": " + what),
        index_(index) {}

  /// 1-based position of the offending digit.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// The brute-force return search hit its cap. Always a discrepancy, never recoverable.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::uint64_t cap)
      : Error("no return found within cap " + std::to_string(cap)), cap_(cap) {}

  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

}  // namespace sturmian
