#include "sturmian/continued_fraction.hpp"

#include <sstream>
#include <utility>

#include "sturmian/errors.hpp"

namespace sturmian {

namespace {

void check_digits(const std::vector<std::uint64_t>& digits) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] == 0) {
      throw DomainError("partial quotients must be positive (digit " + std::to_string(i + 1) +
                        " is 0)");
    }
  }
}

}  // namespace

ContinuedFraction::ContinuedFraction(std::vector<std::uint64_t> preamble,
                                     std::vector<std::uint64_t> period)
    : preamble_(std::move(preamble)), period_(std::move(period)) {
  check_digits(preamble_);
  check_digits(period_);
}

ContinuedFraction ContinuedFraction::finite(std::vector<std::uint64_t> digits) {
  return ContinuedFraction(std::move(digits), {});
}

ContinuedFraction ContinuedFraction::periodic(std::vector<std::uint64_t> preamble,
                                              std::vector<std::uint64_t> period) {
  return ContinuedFraction(std::move(preamble), std::move(period));
}

ContinuedFraction ContinuedFraction::linear_schedule(std::size_t depth) {
  std::vector<std::uint64_t> digits(depth);
  for (std::size_t k = 1; k <= depth; ++k) digits[k - 1] = k;
  return finite(std::move(digits));
}

ContinuedFraction ContinuedFraction::power_schedule(std::size_t depth) {
  if (depth > 63) throw DomainError("power schedule supports at most 63 digits");
  std::vector<std::uint64_t> digits(depth);
  for (std::size_t k = 1; k <= depth; ++k) digits[k - 1] = std::uint64_t{1} << k;
  return finite(std::move(digits));
}

std::uint64_t ContinuedFraction::digit(std::size_t k) const {
  if (k == 0) throw DomainError("partial quotients are indexed from 1");
  if (k <= preamble_.size()) return preamble_[k - 1];
  if (period_.empty()) throw InsufficientPrecision(k);
  return period_[(k - preamble_.size() - 1) % period_.size()];
}

std::optional<std::size_t> ContinuedFraction::depth() const {
  if (is_periodic()) return std::nullopt;
  return preamble_.size();
}

bool ContinuedFraction::has_digit(std::size_t k) const {
  return k >= 1 && (is_periodic() || k <= preamble_.size());
}

std::string ContinuedFraction::describe() const {
  std::ostringstream os;
  os << "[0;";
  const char* sep = " ";
  for (auto d : preamble_) {
    os << sep << d;
    sep = ", ";
  }
  if (!period_.empty()) {
    os << sep << "(";
    const char* inner = "";
    for (auto d : period_) {
      os << inner << d;
      inner = ", ";
    }
    os << ")";
  }
  os << "]";
  return os.str();
}

}  // namespace sturmian
