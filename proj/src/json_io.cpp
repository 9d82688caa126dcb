#include "sturmian/json_io.hpp"

#include "sturmian/decimal.hpp"

namespace sturmian {

json to_json(const Integer& v) {
  static const Integer limit = Integer(1) << 53;
  if (abs(v) < limit) return v.convert_to<std::int64_t>();
  return to_string(v);
}

json to_json(const Rational& v) { return json::array({to_json(numerator(v)), to_json(denominator(v))}); }

json to_json(const LinearForm& f, const Angle& angle) {
  return {{"a", to_json(f.a)}, {"b", to_json(f.b)}, {"decimal", to_decimal(f, angle)}};
}

json to_json(const CircleInterval& interval, const Angle& angle) {
  json j;
  switch (interval.kind()) {
    case CircleInterval::Kind::empty:
      j["kind"] = "empty";
      return j;
    case CircleInterval::Kind::full:
      j["kind"] = "full";
      j["length"] = to_json(LinearForm::one(), angle);
      return j;
    case CircleInterval::Kind::arc:
      break;
  }
  j["kind"] = "arc";
  j["left"] = to_json(interval.left(), angle);
  j["right"] = to_json(interval.right(), angle);
  if (interval.left_cut()) j["left_cut"] = *interval.left_cut();
  if (interval.right_cut()) j["right_cut"] = *interval.right_cut();
  j["length"] = to_json(interval.length(), angle);
  return j;
}

json to_json(const DigitWord& x) { return x.digits(); }

json to_json(const ReturnProfile& profile) {
  json rows = json::array();
  for (std::size_t k = 0; k < profile.r.size(); ++k) {
    rows.push_back({{"k", k},
                    {"q_k", to_json(profile.q[k])},
                    {"r_k", to_json(profile.r[k])},
                    {"qk_over_rk", to_json(profile.lower_ratio(k))},
                    {"qk1_over_rk", to_json(profile.upper_ratio(k))}});
  }
  return rows;
}

json to_json(const RateEstimate& e) {
  return {{"window", {e.window_begin, e.window_end}},
          {"lower", to_json(e.lower)},
          {"lower_decimal", to_decimal(e.lower)},
          {"upper", to_json(e.upper)},
          {"upper_decimal", to_decimal(e.upper)},
          {"lower_last", to_json(e.lower_last)},
          {"upper_last", to_json(e.upper_last)},
          {"lower_converged", e.lower_converged},
          {"upper_converged", e.upper_converged}};
}

json to_json(const RateConstants& rc) {
  json j = {{"depth", rc.depth},
            {"M", rc.M},
            {"M_exact", rc.M_exact},
            {"r0_estimate", to_json(rc.r0_estimate)},
            {"r0_estimate_decimal", to_decimal(rc.r0_estimate)},
            {"r1_estimate", to_json(rc.r1_estimate)},
            {"r1_estimate_decimal", to_decimal(rc.r1_estimate)},
            {"r0_last_decimal", to_decimal(rc.r0_last)},
            {"r1_last_decimal", to_decimal(rc.r1_last)},
            {"r0_converged", rc.r0_converged},
            {"r1_converged", rc.r1_converged}};
  if (rc.limits) {
    j["r0_limit"] = to_decimal(rc.limits->r0);
    j["r1_limit"] = to_decimal(rc.limits->r1);
  } else {
    j["r0_limit"] = nullptr;
    j["r1_limit"] = nullptr;
  }
  j["bounds"] = {{"lower_bound", rc.lower_bound},
                 {"r0_below_golden", rc.r0_below_golden},
                 {"r1_above_golden", rc.r1_above_golden},
                 {"upper_bound", rc.upper_bound},
                 {"chain_holds", rc.chain_holds()}};
  if (rc.identity_error) {
    j["identity_error"] = to_decimal(*rc.identity_error, 6);
  } else {
    j["identity_error"] = nullptr;
  }
  return j;
}

json angle_json(const Angle& angle) {
  const auto& cf = angle.cf();
  json j = {{"describe", cf.describe()}, {"preamble", cf.preamble()}};
  if (cf.is_periodic()) {
    j["period"] = cf.period();
  } else {
    j["period"] = nullptr;
  }
  return j;
}

}  // namespace sturmian
