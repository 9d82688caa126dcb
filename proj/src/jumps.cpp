#include "sturmian/jumps.hpp"

#include "sturmian/errors.hpp"

namespace sturmian {

std::optional<std::size_t> ReturnProfile::bound_violation() const {
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] < q[k] || r[k] > q[k + 1] + q[k] - 1) return k;
  }
  return std::nullopt;
}

namespace {

ReturnProfile empty_profile(std::size_t K, const Angle& angle) {
  ReturnProfile p;
  p.q.reserve(K + 2);
  for (std::size_t k = 0; k <= K + 1; ++k) p.q.push_back(angle.q(static_cast<long>(k)));
  p.r.reserve(K + 1);
  return p;
}

}  // namespace

ReturnProfile jumps_by_formula(const DigitWord& x, std::size_t K, const Angle& angle) {
  if (x.size() < K + 1) throw DomainError("jumps up to depth K need K + 1 digits");
  validate(x.prefix(K + 1), angle);
  auto p = empty_profile(K, angle);
  Integer r = 0;
  for (std::size_t k = 0; k <= K; ++k) {
    r += x[k + 1] * p.q[k];
    p.r.push_back(r);
  }
  return p;
}

ReturnProfile jumps_by_definition(const PackedBits& prefix, std::size_t K, const Angle& angle,
                                  const KleinRule& rule) {
  auto p = empty_profile(K, angle);
  CylinderTracker tracker(angle);
  long bracket = rule.bracket(LinearForm::one()).k;
  std::size_t n = 0;
  while (true) {
    while (p.r.size() <= K && bracket >= static_cast<long>(p.r.size())) p.r.emplace_back(n);
    if (p.r.size() > K) break;
    if (n >= prefix.size()) {
      throw DomainError("binary prefix of length " + std::to_string(prefix.size()) +
                        " exhausted before r_" + std::to_string(p.r.size()));
    }
    if (!tracker.push(prefix[n])) throw DomainError("binary prefix is not in the language");
    ++n;
    if (tracker.changed()) bracket = rule.bracket(tracker.length()).k;
  }
  return p;
}

ReturnProfile jumps_by_definition(const PackedBits& prefix, std::size_t K, const Angle& angle) {
  return jumps_by_definition(prefix, K, angle, KleinRule(angle));
}

std::size_t definition_prefix_length(std::size_t K, const Angle& angle) {
  const auto k = static_cast<long>(K);
  return (angle.q(k + 1) + angle.q(k)).convert_to<std::size_t>();
}

}  // namespace sturmian
