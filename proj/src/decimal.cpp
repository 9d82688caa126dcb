#include "sturmian/decimal.hpp"

#include <functional>

#include "sturmian/errors.hpp"

namespace sturmian {

namespace {

// Exact floor and sign of num/den, supplied by the caller.
struct Oracle {
  std::function<Integer(const LinearForm&, const LinearForm&)> floor_ratio;
  std::function<int(const LinearForm&)> sign;
};

Integer pow10(int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

std::size_t digit_count(const Integer& v) { return v.is_zero() ? 0 : v.str().size(); }

/// |value| * 10^e scaled into a numerator.
LinearForm scale(const LinearForm& num, const LinearForm& den, int e, LinearForm& den_out) {
  if (e >= 0) {
    den_out = den;
    return num * pow10(e);
  }
  den_out = den * pow10(-e);
  return num;
}

std::string render(LinearForm num, const LinearForm& den, int sig, const Oracle& oracle) {
  if (sig < 1) throw DomainError("need at least one significant digit");
  const int s = oracle.sign(num);
  if (s == 0) return "0";
  if (s < 0) num = -num;

  // Find e with 10^(sig-1) <= floor(|v| 10^e) < 10^sig.
  int e = sig;
  Integer t;
  LinearForm scaled_den;
  for (int guard = 0;; ++guard) {
    if (guard > 10000) throw Error("decimal rendering did not converge");
    const LinearForm scaled = scale(num, den, e, scaled_den);
    t = oracle.floor_ratio(scaled, scaled_den);
    const auto d = static_cast<int>(digit_count(t));
    if (d == sig) break;
    e += d == 0 ? 8 : sig - d;
  }

  // Round half-even on the remainder: compare 2|v|10^e against 2t + 1.
  const LinearForm scaled = scale(num, den, e, scaled_den);
  const int r = oracle.sign(scaled * 2 - scaled_den * (2 * t + 1));
  if (r > 0 || (r == 0 && t % 2 == 1)) t += 1;
  if (digit_count(t) > static_cast<std::size_t>(sig)) {
    t /= 10;
    e -= 1;
  }

  std::string digits = t.str();
  const int lead_exp = sig - 1 - e;  // power of ten of the leading digit
  std::string out = s < 0 ? "-" : "";
  if (lead_exp >= -6 && lead_exp < sig) {
    if (lead_exp >= 0) {
      out += digits.substr(0, static_cast<std::size_t>(lead_exp) + 1);
      std::string frac = digits.substr(static_cast<std::size_t>(lead_exp) + 1);
      if (!frac.empty()) out += "." + frac;
    } else {
      out += "0." + std::string(static_cast<std::size_t>(-lead_exp - 1), '0') + digits;
    }
  } else {
    out += digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(lead_exp);
  }
  return out;
}

}  // namespace

std::string to_decimal(const LinearForm& num, const LinearForm& den, const Angle& angle,
                       int significant) {
  Oracle oracle{
      [&](const LinearForm& n, const LinearForm& d) { return angle.floor_ratio(n, d); },
      [&](const LinearForm& f) { return static_cast<int>(angle.sign(f)); }};
  if (angle.sign(den) != Sign::positive) throw DomainError("denominator must be positive");
  return render(num, den, significant, oracle);
}

std::string to_decimal(const Rational& value, int significant) {
  // Integer-only forms never consult alpha.
  Oracle oracle{[](const LinearForm& n, const LinearForm& d) {
                  Integer q = n.a / d.a;
                  if ((n.a % d.a != 0) && ((n.a < 0) != (d.a < 0))) --q;
                  return q;
                },
                [](const LinearForm& f) { return f.a.sign(); }};
  return render(LinearForm::constant(numerator(value)), LinearForm::constant(denominator(value)),
                significant, oracle);
}

}  // namespace sturmian
