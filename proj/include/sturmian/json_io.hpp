#pragma once

#include <json.hpp>

#include "sturmian/angle.hpp"
#include "sturmian/circle_interval.hpp"
#include "sturmian/digit_word.hpp"
#include "sturmian/integer.hpp"
#include "sturmian/jumps.hpp"
#include "sturmian/linear_form.hpp"
#include "sturmian/rates.hpp"

namespace sturmian {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// A JSON number when |v| < 2^53, a decimal string otherwise.
json to_json(const Integer& v);
/// [numerator, denominator]
json to_json(const Rational& v);
/// {"a": .., "b": .., "decimal": ".."} for a + b alpha.
json to_json(const LinearForm& f, const Angle& angle);
json to_json(const CircleInterval& interval, const Angle& angle);
json to_json(const DigitWord& x);
json to_json(const ReturnProfile& profile);
json to_json(const RateEstimate& e);
json to_json(const RateConstants& rc);
json angle_json(const Angle& angle);

}  // namespace sturmian
