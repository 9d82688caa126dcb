#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sturmian/angle.hpp"
#include "sturmian/json_io.hpp"
#include "sturmian/measure.hpp"

namespace sturmian {

struct VerifyConfig {
  std::size_t max_length = 500;  // words and partitions for n <= max_length
  std::size_t jump_depth = 12;   // r_k for k <= jump_depth on random points
  std::size_t points = 100;
  std::size_t extremal_depth = 20;
  std::size_t coding_depth = 8;   // J_u and gamma for k <= coding_depth
  std::size_t measure_depth = 6;  // path probabilities for k <= measure_depth
  std::uint64_t seed = 1;
  Execution exec = Execution::parallel;
  bool corrupt_eta = false;
};

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::optional<json> counterexample;  // first failure in index order
  double seconds = 0;

  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
};

/// The printed recurrence eta_{k+1} = a_{k+1} eta_k - eta_{k-1}, eta_{-1} = 1,
/// eta_0 = alpha. Not the gaps of the rotation; negative control only.
EtaSequence corrupted_eta(const Angle& angle);

/// tau_interval_formula = tau_interval_bruteforce = tau_word_oracle on every cell of I^n.
SuiteResult verify_tau(const Angle& angle, const VerifyConfig& config);
/// Cell words = L^n, |L^n| = n + 1, at most three lengths summing to 1, two
/// lengths eta_{k-1}, eta_{k-1} + eta_k at n = q_k - 1, and cylinder_interval
/// agreeing with the cell for n <= 64.
SuiteResult verify_partition(const Angle& angle, const VerifyConfig& config);
/// {J_u : u in L^k(X_alpha)} = I^{q_k - 1}, gamma inverts J, children tile J_u.
SuiteResult verify_coding(const Angle& angle, const VerifyConfig& config);
/// Definition route = recurrence route on sampled points, with q_k <= r_k <= q_{k+1} + q_k - 1.
SuiteResult verify_jumps(const Angle& angle, const VerifyConfig& config);
/// r_k(b) = q_{k+1} + q_k - 1, r_{2k-1}(c) = r_{2k}(c) = q_{2k}, r_{2k}(d) = r_{2k+1}(d) = q_{2k+1}.
SuiteResult verify_extremal(const Angle& angle, const VerifyConfig& config);
/// Transition rows sum to 1 and path probabilities equal |J_u|, as forms.
SuiteResult verify_measure(const Angle& angle, const VerifyConfig& config);

VerifyReport verify_all(const Angle& angle, const VerifyConfig& config);

json to_json(const SuiteResult& s);

}  // namespace sturmian
