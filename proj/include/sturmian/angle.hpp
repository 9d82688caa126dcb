#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>

#include "sturmian/continued_fraction.hpp"
#include "sturmian/integer.hpp"
#include "sturmian/linear_form.hpp"

namespace sturmian {

struct Convergent {
  Integer p;
  Integer q;
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

namespace detail {
struct AngleState;
}

/// An irrational angle together with its lazily extended convergent table.
///
/// Every comparison between numbers of the form a + b*alpha goes through
/// sign(). The result is exact: a floating-point filter with a rigorous error
/// bound answers the easy cases, and the rest are separated against the
/// convergent intervals p_k/q_k < alpha < p_{k+1}/q_{k+1} (k even). Copies
/// share the table; the table is extended under a mutex so an Angle can be
/// used from several threads.
class Angle {
 public:
  explicit Angle(ContinuedFraction cf);

  const ContinuedFraction& cf() const;

  /// a_k; records the depth consumed.
  std::uint64_t digit(std::size_t k) const;

  /// (p_k, q_k) for k >= -1.
  Convergent convergent(long k) const;
  Integer p(long k) const { return convergent(k).p; }
  Integer q(long k) const { return convergent(k).q; }

  /// eta_k = (-1)^k (q_k alpha - p_k), k >= -1.
  LinearForm eta(long k) const;

  Sign sign(const LinearForm& f) const;
  /// sign(a + b alpha) without leaving machine integers on the fast path.
  Sign sign_small(std::int64_t a, std::int64_t b) const;
  /// -1, 0 or +1 as f <, =, > g.
  int compare(const LinearForm& f, const LinearForm& g) const;
  bool less(const LinearForm& f, const LinearForm& g) const { return compare(f, g) < 0; }

  /// floor(d * alpha).
  Integer floor_multiple(const Integer& d) const;
  std::int64_t floor_multiple_small(std::int64_t m) const;
  /// {i alpha} as a form in [0, 1).
  LinearForm frac_multiple(const Integer& i) const;
  /// The cut point {-i alpha}, i >= 0.
  LinearForm frac_position(std::uint64_t i) const;
  /// Reduction of f to [0, 1).
  LinearForm frac(const LinearForm& f) const;

  /// floor(num / den) for den > 0.
  Integer floor_ratio(const LinearForm& num, const LinearForm& den) const;

  /// Non-certified double approximation, for display and statistics only.
  double approx(const LinearForm& f) const;
  double alpha_approx() const;

  /// Largest digit index read so far by any operation on this angle.
  std::size_t depth_consumed() const;

 private:
  Sign sign_exact(const LinearForm& f) const;
  void note_depth(std::size_t k) const;

  std::shared_ptr<detail::AngleState> state_;
};

/// Same as Angle::frac_position; named after the cut-point construction.
inline LinearForm frac_position(std::uint64_t i, const Angle& angle) {
  return angle.frac_position(i);
}

}  // namespace sturmian
