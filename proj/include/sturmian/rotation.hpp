#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sturmian/angle.hpp"
#include "sturmian/circle_interval.hpp"

namespace sturmian {

/// I_u = intersection over k of F^{-k}(I_{u_k}), with I_0 = [0, 1 - alpha)
/// and I_1 = [1 - alpha, 1). Returns the empty interval for words outside
/// the language.
CircleInterval cylinder_interval(std::string_view word, const Angle& angle);

/// The cylinder I_{w(n)} of a binary word fed one symbol at a time.
///
/// The current cell is a cell of the partition by the cuts x_0..x_n, kept
/// as a pair of cut indices. Each symbol either keeps the cell or keeps one
/// of the two halves split off by the new cut x_{n+1}. Cut arithmetic stays
/// in machine integers below 2^52.
class CylinderTracker {
 public:
  explicit CylinderTracker(Angle angle);

  /// Appends a symbol. Returns false, leaving the state unchanged, when the
  /// extended word is not in the language.
  bool push(bool bit);

  std::uint64_t size() const noexcept { return n_; }
  bool is_full() const noexcept { return full_; }
  std::uint64_t left_cut() const noexcept { return l_; }
  std::uint64_t right_cut() const noexcept { return r_; }
  /// Whether the last push shrank the cell.
  bool changed() const noexcept { return changed_; }

  CircleInterval interval() const;
  LinearForm length() const;
  /// The cut x_i = {-i alpha} as c_i - i alpha.
  LinearForm cut(std::uint64_t i) const;

 private:
  std::int64_t cut_constant(std::uint64_t i) const;
  // x_i < x_j given c_i, c_j
  bool cut_less(std::uint64_t i, std::int64_t ci, std::uint64_t j, std::int64_t cj) const;
  bool symbol(std::uint64_t i) const;  // itinerary symbol of x_i at time n

  Angle angle_;
  std::uint64_t n_ = 0;
  std::uint64_t l_ = 0;
  std::uint64_t r_ = 0;
  std::int64_t cl_ = 0;
  std::int64_t cr_ = 0;
  bool full_ = true;
  bool changed_ = false;
};

struct KleinBracket {
  long k = -1;  // eta_{k+1} < |I| <= eta_k
  Integer tau;  // q_{k+1}
};

/// Return time of a half-open interval from its length:
/// eta_{k+1} < |I| <= eta_k  implies  tau(I) = q_{k+1}.
class KleinRule {
 public:
  using EtaSequence = std::function<LinearForm(long)>;

  explicit KleinRule(Angle angle);
  /// Same rule driven by a caller-supplied eta sequence (fault injection).
  KleinRule(Angle angle, EtaSequence eta);

  KleinBracket bracket(const LinearForm& length) const;
  Integer tau(const CircleInterval& interval) const;

 private:
  Angle angle_;
  EtaSequence eta_;
};

Integer tau_interval_formula(const CircleInterval& interval, const Angle& angle);

/// Least k in [1, cap] with F^k(I) meeting I, found by walking the orbit of
/// alpha. Default cap is q_{K+2} for the Klein bracket K of |I|. Throws
/// CapExceeded when nothing returns within the cap.
std::uint64_t tau_interval_bruteforce(const CircleInterval& interval, const Angle& angle,
                                      std::optional<std::uint64_t> cap = std::nullopt);

/// Record minima of the circle distance ||k alpha|| for k = 1..horizon.
///
/// The first k with ||k alpha|| < |I| is always a strict record, so scanning
/// the records gives the same answer as tau_interval_bruteforce while
/// touching only a handful of entries per query.
class ReturnRecords {
 public:
  ReturnRecords(const Angle& angle, std::uint64_t horizon);

  /// Throws CapExceeded if no record within the horizon is below |I|.
  std::uint64_t first_return(const LinearForm& length) const;
  std::uint64_t horizon() const noexcept { return horizon_; }

  struct Record {
    std::uint64_t k;
    LinearForm distance;
  };
  const std::vector<Record>& records() const noexcept { return records_; }

 private:
  Angle angle_;
  std::uint64_t horizon_;
  std::vector<Record> records_;
};

/// Cut points {-i alpha} for i = 0..n.
std::vector<LinearForm> cut_points(std::size_t n, const Angle& angle);

struct Cell {
  std::string word;
  CircleInterval interval;
};

/// The n+1 cells of I^n, sorted by left endpoint, each labelled by its word.
std::vector<Cell> partition(std::size_t n, const Angle& angle);

}  // namespace sturmian
