#pragma once

// Independent reference computations for the tests: angles in closed form,
// orbits in 100-digit floating point, strings searched naively.

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sturmian/angle.hpp"
#include "sturmian/continued_fraction.hpp"

namespace oracle {

using HP = boost::multiprecision::cpp_dec_float_100;

struct NamedAngle {
  std::string name;
  sturmian::ContinuedFraction cf;
  HP alpha;  // closed form
};

inline std::vector<NamedAngle> test_angles() {
  using sturmian::ContinuedFraction;
  return {
      {"golden", ContinuedFraction::golden(), (sqrt(HP(5)) - 1) / 2},
      {"silver", ContinuedFraction::silver(), sqrt(HP(2)) - 1},
      // [0; 2, 3, 2, 3, ...]: 2 alpha^2 + 6 alpha - 3 = 0
      {"[0;(2,3)]", ContinuedFraction::periodic({}, {2, 3}), (sqrt(HP(15)) - 3) / 2},
      // [0; 2, 3, 3, ...] = 1 / (2 + beta), beta = [0; 3, 3, ...]
      {"[0;2,(3)]", ContinuedFraction::periodic({2}, {3}), 1 / (2 + (sqrt(HP(13)) - 3) / 2)},
  };
}

inline HP value(const sturmian::LinearForm& f, const HP& alpha) {
  return HP(f.a.str()) + HP(f.b.str()) * alpha;
}

inline HP frac(const HP& x) { return x - floor(x); }

/// s_i = 1 iff {x0 + i alpha} in [1 - alpha, 1), i < length.
inline std::string itinerary(const HP& alpha, const HP& x0, std::size_t length) {
  std::string s;
  s.reserve(length);
  HP x = frac(x0);
  const HP cut = 1 - alpha;
  for (std::size_t i = 0; i < length; ++i) {
    s.push_back(x >= cut ? '1' : '0');
    x += alpha;
    if (x >= 1) x -= 1;
  }
  return s;
}

inline std::set<std::string> factors(const std::string& s, std::size_t n) {
  std::set<std::string> out;
  for (std::size_t i = 0; i + n <= s.size(); ++i) out.insert(s.substr(i, n));
  return out;
}

/// Smallest gap between two occurrences of u in s; 0 if it occurs at most once.
inline std::size_t min_gap(const std::string& s, const std::string& u) {
  std::size_t best = 0;
  std::size_t prev = s.find(u);
  if (prev == std::string::npos) return 0;
  for (std::size_t pos = s.find(u, prev + 1); pos != std::string::npos; pos = s.find(u, pos + 1)) {
    if (best == 0 || pos - prev < best) best = pos - prev;
    prev = pos;
  }
  return best;
}

/// Sorted cut points {-i alpha}, i = 0..n.
inline std::vector<HP> sorted_cuts(const HP& alpha, std::size_t n) {
  std::vector<HP> v;
  for (std::size_t i = 0; i <= n; ++i) v.push_back(frac(-HP(i) * alpha));
  std::sort(v.begin(), v.end());
  return v;
}

/// Least k >= 1 with ||k alpha|| < len: the return time of any half-open arc of that length.
inline std::uint64_t first_return(const HP& alpha, const HP& len) {
  for (std::uint64_t k = 1;; ++k) {
    const HP f = frac(HP(k) * alpha);
    const HP d = f < HP(0.5) ? f : 1 - f;
    if (d < len) return k;
  }
}

inline bool close(const HP& x, const HP& y, const HP& tol = HP("1e-80")) { return abs(x - y) <= tol; }

}  // namespace oracle
