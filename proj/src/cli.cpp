#include "sturmian/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "sturmian/coding.hpp"
#include "sturmian/decimal.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/json_io.hpp"
#include "sturmian/language.hpp"
#include "sturmian/measure.hpp"
#include "sturmian/rates.hpp"
#include "sturmian/rotation.hpp"
#include "sturmian/verify.hpp"

namespace sturmian {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Verification failed; the report has already been written.
struct Failed {};

struct Options {
  std::string cf;
  std::string period;
  std::string schedule;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> n;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
  double tol = 1e-6;
  double eps = 0.05;
  std::string fault;
  std::string word;
  std::string cuts;
  std::string point;
  std::string digits;
  std::string exec = "parallel";
};

std::vector<std::uint64_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError(std::string("bad ") + what + " list: " + text);
    }
    out.push_back(std::stoull(item));
  }
  return out;
}

Angle make_angle(const Options& o, std::size_t depth_hint) {
  if (!o.schedule.empty()) {
    if (!o.cf.empty() || !o.period.empty()) throw UsageError("give either --cf or --schedule");
    if (o.schedule == "linear") return Angle(ContinuedFraction::linear_schedule(depth_hint + 60));
    if (o.schedule == "power") return Angle(ContinuedFraction::power_schedule(63));
    throw UsageError("unknown schedule " + o.schedule + " (linear or power)");
  }
  if (o.cf.empty() && o.period.empty()) throw UsageError("an angle needs --cf or --schedule");
  auto pre = parse_list(o.cf, "--cf");
  auto per = parse_list(o.period, "--period");
  if (std::find(pre.begin(), pre.end(), 0) != pre.end() ||
      std::find(per.begin(), per.end(), 0) != per.end()) {
    throw UsageError("continued fraction digits must be >= 1");
  }
  if (per.empty()) return Angle(ContinuedFraction::finite(std::move(pre)));
  return Angle(ContinuedFraction::periodic(std::move(pre), std::move(per)));
}

enum class Format { text, json, csv };

Format parse_format(const std::string& f) {
  if (f == "text") return Format::text;
  if (f == "json") return Format::json;
  if (f == "csv") return Format::csv;
  throw UsageError("unknown format " + f);
}

Execution parse_exec(const std::string& e) {
  if (e == "parallel") return Execution::parallel;
  if (e == "serial") return Execution::serial;
  throw UsageError("unknown execution mode " + e);
}

json header(const char* command, const Angle& angle) {
  return {{"schema", kSchemaVersion}, {"command", command}, {"angle", angle_json(angle)}};
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string lpad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

/// Fixed-width table; the last column is not padded.
std::string table(const std::vector<std::vector<std::string>>& rows, bool right_align_numbers) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream os;
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    const auto& r = rows[ri];
    for (std::size_t i = 0; i < r.size(); ++i) {
      const bool last = i + 1 == r.size();
      if (i > 0) os << "  ";
      if (last) {
        os << r[i];
      } else if (right_align_numbers && ri > 0 && i == 0) {
        os << lpad(r[i], width[i]);
      } else {
        os << pad(r[i], width[i]);
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::string csv(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
    os << '\n';
  }
  return os.str();
}

std::string verdict(bool ok) { return ok ? "holds" : "FAILS"; }

std::string form_text(const LinearForm& f, const Angle& angle) {
  return f.to_string() + " = " + to_decimal(f, angle);
}

// rates

std::string cmd_rates(const Options& o, bool& failed) {
  const std::size_t K = o.depth.value_or(30);
  if (K < 2) throw UsageError("rates needs --depth >= 2");
  const Angle angle = make_angle(o, K);
  const auto rc = rate_constants(angle, K, o.tol);
  failed = !rc.chain_holds() || (rc.identity_error && *rc.identity_error >= HighPrecision("1e-9"));

  std::vector<std::vector<std::string>> rows{
      {"k", "a_k", "q_k", "q_k/(q_{k+1}+q_k-1)", "q_{k+1}/q_k"}};
  json jtable = json::array();
  for (std::size_t k = 0; k <= K; ++k) {
    const auto kk = static_cast<long>(k);
    const Rational lo(angle.q(kk), angle.q(kk + 1) + angle.q(kk) - 1);
    const Rational hi(angle.q(kk + 1), angle.q(kk));
    rows.push_back({std::to_string(k), k == 0 ? "" : std::to_string(angle.digit(k)),
                    to_string(angle.q(kk)), to_decimal(lo, 12), to_decimal(hi, 12)});
    jtable.push_back({{"k", k},
                      {"a_k", k == 0 ? json(nullptr) : json(angle.digit(k))},
                      {"q_k", to_json(angle.q(kk))},
                      {"r0_term", to_json(lo)},
                      {"r1_term", to_json(hi)}});
  }

  switch (parse_format(o.format)) {
    case Format::json: {
      json j = header("rates", angle);
      j["depth"] = K;
      j["table"] = jtable;
      j["constants"] = to_json(rc);
      j["passed"] = !failed;
      return j.dump(2) + "\n";
    }
    case Format::csv:
      return csv(rows);
    case Format::text:
      break;
  }
  std::ostringstream os;
  os << "angle  " << angle.cf().describe() << "\n";
  os << "depth  " << K << "\n";
  os << "M      " << rc.M << (rc.M_exact ? " (exact, period maximum)" : " (max of a_1..a_{K+1})")
     << "\n\n";
  os << table(rows, true) << "\n";
  const std::string window = "k in [" + std::to_string(K / 2) + ", " + std::to_string(K) + "]";
  os << "r0 estimate  " << to_decimal(rc.r0_estimate) << "  (min over " << window << "; at K "
     << to_decimal(rc.r0_last) << (rc.r0_converged ? ", converged" : ", not converged") << ")\n";
  os << "r1 estimate  " << to_decimal(rc.r1_estimate) << "  (max over " << window << "; at K "
     << to_decimal(rc.r1_last) << (rc.r1_converged ? ", converged" : ", not converged") << ")\n";
  if (rc.limits) {
    os << "r0 limit     " << to_decimal(rc.limits->r0) << "\n";
    os << "r1 limit     " << to_decimal(rc.limits->r1) << "\n";
  }
  const char* on = rc.limits ? "limits" : "estimates";
  os << "\nbound chain (on " << on << ")\n";
  os << "  1/(M+2) <= r0     " << verdict(rc.lower_bound) << "\n";
  os << "  r0 <= gamma^-2    " << verdict(rc.r0_below_golden) << "\n";
  os << "  gamma <= r1       " << verdict(rc.r1_above_golden) << "\n";
  os << "  r1 <= M+1         " << verdict(rc.upper_bound) << "\n";
  if (rc.identity_error) {
    os << "  |r1 - (1/r0 - 1)| = " << to_decimal(*rc.identity_error, 6) << "  "
       << verdict(*rc.identity_error < HighPrecision("1e-9")) << "\n";
  }
  return os.str();
}

// partition

std::string cmd_partition(const Options& o) {
  if (!o.n) throw UsageError("partition needs --n");
  const std::size_t n = *o.n;
  const Angle angle = make_angle(o, 8);
  const auto cells = partition(n, angle);

  // J-labels when n = q_k - 1.
  std::optional<long> k_of_n;
  for (long k = 0; angle.cf().has_digit(static_cast<std::size_t>(k) + 1) || k == 0; ++k) {
    const Integer q = angle.q(k);
    if (q - 1 == n) k_of_n = k;
    if (q - 1 > n) break;
  }
  std::vector<std::string> labels;
  for (const auto& c : cells) {
    labels.push_back(k_of_n ? gamma_encode(c.word, static_cast<std::size_t>(*k_of_n), angle).label()
                            : "");
  }

  auto cut_text = [](const std::optional<std::uint64_t>& c) {
    return c ? std::to_string(*c) : std::string("0");
  };
  auto endpoints = [&](const CircleInterval& I) {
    if (I.is_full()) return std::pair{LinearForm::zero(), LinearForm::zero()};
    return std::pair{I.left(), I.right()};
  };

  switch (parse_format(o.format)) {
    case Format::json: {
      json j = header("partition", angle);
      j["n"] = n;
      j["k"] = k_of_n ? json(*k_of_n) : json(nullptr);
      json jc = json::array();
      for (std::size_t i = 0; i < cells.size(); ++i) {
        jc.push_back({{"word", cells[i].word},
                      {"j_label", k_of_n ? json(labels[i]) : json(nullptr)},
                      {"interval", to_json(cells[i].interval, angle)}});
      }
      j["cells"] = jc;
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      std::vector<std::vector<std::string>> rows{{"word", "j_label", "left_cut", "right_cut", "left_a",
                                                  "left_b", "right_a", "right_b", "length_a",
                                                  "length_b", "length_decimal"}};
      for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& I = cells[i].interval;
        const auto [l, r] = endpoints(I);
        rows.push_back({cells[i].word, labels[i], cut_text(I.left_cut()), cut_text(I.right_cut()),
                        to_string(l.a), to_string(l.b), to_string(r.a), to_string(r.b),
                        to_string(I.length().a), to_string(I.length().b),
                        to_decimal(I.length(), angle)});
      }
      return csv(rows);
    }
    case Format::text:
      break;
  }
  std::ostringstream os;
  os << "angle  " << angle.cf().describe() << "\n";
  os << "n      " << n;
  if (k_of_n) os << "  (q_" << *k_of_n << " - 1)";
  os << "\n\n";
  std::vector<std::vector<std::string>> rows{{"cell", "word", "J", "interval", "length"}};
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& I = cells[i].interval;
    const std::string interval =
        I.is_full() ? "[x0, x0) = T"
                    : "[x" + cut_text(I.left_cut()) + ", x" + cut_text(I.right_cut()) + ")";
    rows.push_back({std::to_string(i + 1), cells[i].word.empty() ? "-" : cells[i].word,
                    labels[i].empty() ? "-" : labels[i], interval, form_text(I.length(), angle)});
  }
  os << table(rows, true);
  return os.str();
}

// tau

std::string cmd_tau(const Options& o, bool& failed) {
  const Angle angle = make_angle(o, 8);
  if (o.word.empty() == o.cuts.empty()) throw UsageError("tau needs exactly one of --word, --cuts");
  CircleInterval interval = CircleInterval::empty();
  std::optional<std::uint64_t> oracle;
  std::string word;
  if (!o.cuts.empty()) {
    const auto c = parse_list(o.cuts, "--cuts");
    if (c.size() != 2) throw UsageError("--cuts takes two cut indices l,r");
    interval = CircleInterval::between_cuts(angle, c[0], c[1]);
  } else {
    word = o.word == "-" ? "" : o.word;
    interval = cylinder_interval(word, angle);
    if (interval.is_empty()) throw UsageError("word " + word + " is not in the language");
    oracle = tau_word_oracle(word, angle);
  }
  const Integer f = tau_interval_formula(interval, angle);
  const std::uint64_t b = tau_interval_bruteforce(interval, angle);
  const auto bracket = KleinRule(angle).bracket(interval.length());
  const bool agree = f == b && (!oracle || *oracle == b);
  failed = !agree;

  switch (parse_format(o.format)) {
    case Format::json: {
      json j = header("tau", angle);
      j["word"] = o.word.empty() ? json(nullptr) : json(word);
      j["interval"] = to_json(interval, angle);
      j["klein_k"] = bracket.k;
      j["formula"] = to_json(f);
      j["bruteforce"] = b;
      j["word_oracle"] = oracle ? json(*oracle) : json(nullptr);
      j["agree"] = agree;
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      std::vector<std::vector<std::string>> rows{
          {"word", "length_decimal", "klein_k", "formula", "bruteforce", "word_oracle", "agree"}};
      rows.push_back({word, to_decimal(interval.length(), angle), std::to_string(bracket.k),
                      to_string(f), std::to_string(b), oracle ? std::to_string(*oracle) : "",
                      agree ? "true" : "false"});
      return csv(rows);
    }
    case Format::text:
      break;
  }
  std::ostringstream os;
  os << "angle        " << angle.cf().describe() << "\n";
  if (!o.word.empty()) os << "word         " << (word.empty() ? "(empty)" : word) << "\n";
  os << "interval     " << interval.to_string() << "\n";
  os << "length       " << form_text(interval.length(), angle) << "\n";
  os << "klein k      " << bracket.k << "  (eta_{k+1} < |I| <= eta_k)\n";
  os << "formula      " << to_string(f) << "\n";
  os << "bruteforce   " << b << "\n";
  if (oracle) os << "word oracle  " << *oracle << "\n";
  os << (agree ? "agree\n" : "DISAGREE\n");
  return os.str();
}

// jumps

std::string cmd_jumps(const Options& o, bool& failed) {
  const std::size_t K = o.depth.value_or(12);
  const Angle angle = make_angle(o, K);
  if (o.point.empty() == o.digits.empty()) throw UsageError("jumps needs exactly one of --point, --digits");
  DigitWord x;
  std::string name;
  if (!o.point.empty()) {
    ExtremalPoint which;
    if (o.point == "b") {
      which = ExtremalPoint::b;
    } else if (o.point == "c") {
      which = ExtremalPoint::c;
    } else if (o.point == "d") {
      which = ExtremalPoint::d;
    } else {
      throw UsageError("--point is one of b, c, d");
    }
    name = o.point;
    x = extremal_point(which, K + 2, angle);
  } else {
    x = parse_digit_word(o.digits);
    name = x.label();
  }
  validate(x, angle);
  if (x.size() < K + 1) {
    throw UsageError("depth " + std::to_string(K) + " needs " + std::to_string(K + 1) + " digits");
  }
  const auto profile = jumps_by_formula(x, K, angle);

  // Definition route from the point at the left end of J_{x(K+2)}.
  std::optional<bool> agrees;
  const bool small = definition_prefix_length(K, angle) <= (std::size_t{1} << 26);
  if (x.size() >= K + 2 && small) {
    JCursor cur(angle);
    for (std::size_t j = 1; j <= K + 2; ++j) cur.push(x[j]);
    const LinearForm y = cur.interval().is_full() ? LinearForm::zero() : cur.interval().left();
    const auto prefix = generate_prefix(angle, y, definition_prefix_length(K, angle));
    agrees = jumps_by_definition(prefix.bits, K, angle).r == profile.r;
  }
  const auto violation = profile.bound_violation();
  failed = (agrees && !*agrees) || violation.has_value();
  std::optional<RateEstimate> est;
  if (K >= 2) est = rate_estimates(profile, o.tol);

  switch (parse_format(o.format)) {
    case Format::json: {
      json j = header("jumps", angle);
      j["point"] = name;
      j["depth"] = K;
      j["digits"] = to_json(x.prefix(K + 1));
      j["profile"] = to_json(profile);
      j["estimate"] = est ? to_json(*est) : json(nullptr);
      j["bounds_hold"] = !violation.has_value();
      j["definition_agrees"] = agrees ? json(*agrees) : json(nullptr);
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      std::vector<std::vector<std::string>> rows{
          {"k", "x_k1", "q_k", "r_k", "qk_over_rk", "qk1_over_rk"}};
      for (std::size_t k = 0; k <= K; ++k) {
        rows.push_back({std::to_string(k), std::to_string(x[k + 1]), to_string(profile.q[k]),
                        to_string(profile.r[k]), to_decimal(profile.lower_ratio(k)),
                        to_decimal(profile.upper_ratio(k))});
      }
      return csv(rows);
    }
    case Format::text:
      break;
  }
  std::ostringstream os;
  os << "angle  " << angle.cf().describe() << "\n";
  os << "point  " << name << "\n";
  os << "depth  " << K << "\n\n";
  std::vector<std::vector<std::string>> rows{
      {"k", "x_{k+1}", "q_k", "r_k", "q_k/r_k", "q_{k+1}/r_k"}};
  for (std::size_t k = 0; k <= K; ++k) {
    rows.push_back({std::to_string(k), std::to_string(x[k + 1]), to_string(profile.q[k]),
                    to_string(profile.r[k]), to_decimal(profile.lower_ratio(k), 12),
                    to_decimal(profile.upper_ratio(k), 12)});
  }
  os << table(rows, true) << "\n";
  os << "q_k <= r_k <= q_{k+1}+q_k-1  "
     << (violation ? "FAILS at k = " + std::to_string(*violation) : std::string("holds")) << "\n";
  if (agrees) os << "definition route             " << (*agrees ? "agrees" : "DISAGREES") << "\n";
  if (est) {
    os << "R_lower estimate             " << to_decimal(est->lower) << "\n";
    os << "R_upper estimate             " << to_decimal(est->upper) << "\n";
  }
  return os.str();
}

// sample

json histogram(const std::vector<double>& v, int buckets) {
  const auto [lo_it, hi_it] = std::minmax_element(v.begin(), v.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const double w = hi > lo ? (hi - lo) / buckets : 1.0;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(buckets), 0);
  for (double x : v) {
    auto b = static_cast<std::size_t>((x - lo) / w);
    counts[std::min(b, counts.size() - 1)]++;
  }
  json out = json::array();
  for (int i = 0; i < buckets; ++i) {
    out.push_back({{"lo", lo + w * i}, {"hi", lo + w * (i + 1)}, {"count", counts[static_cast<std::size_t>(i)]}});
  }
  return out;
}

double to_double(const Rational& r) { return to_high_precision(r).convert_to<double>(); }

std::string cmd_sample(const Options& o) {
  const std::size_t K = o.depth.value_or(40);
  const std::size_t n = o.samples.value_or(500);
  if (K < 2) throw UsageError("sample needs --depth >= 2");
  if (n == 0) throw UsageError("sample needs --samples >= 1");
  const Angle angle = make_angle(o, K);
  const auto s = empirical_rates(angle, K, n, o.seed, parse_exec(o.exec), o.eps);

  switch (parse_format(o.format)) {
    case Format::json: {
      json j = header("sample", angle);
      j["depth"] = K;
      j["samples"] = n;
      j["seed"] = o.seed;
      j["eps"] = o.eps;
      j["r0_target"] = to_decimal(s.r0_target);
      j["r1_target"] = to_decimal(s.r1_target);
      j["median_lower"] = to_decimal(s.median_lower);
      j["median_upper"] = to_decimal(s.median_upper);
      j["fraction_lower_within"] = s.fraction_lower_within;
      j["fraction_upper_within"] = s.fraction_upper_within;
      j["bound_violations"] = s.bound_violations;
      std::vector<double> lows, ups;
      for (const auto& r : s.samples) {
        lows.push_back(to_double(r.estimate.lower));
        ups.push_back(to_double(r.estimate.upper));
      }
      j["histogram"] = {{"lower", histogram(lows, 20)}, {"upper", histogram(ups, 20)}};
      json rows = json::array();
      for (std::size_t k = 0; k <= std::min<std::size_t>(6, K); ++k) {
        for (bool after_max : {false, true}) {
          if (k == 0 && after_max) continue;
          const auto row = transition_row(k, after_max, angle);
          rows.push_back({{"k", k},
                          {"context", k == 0 ? "initial" : (after_max ? "W_k = a_k" : "W_k < a_k")},
                          {"digits", {row.first_digit, row.last_digit}},
                          {"small", to_json(row.small, angle)},
                          {"last", to_json(row.last, angle)},
                          {"denominator", to_json(row.denominator, angle)},
                          {"p_small", to_decimal(row.small, row.denominator, angle)},
                          {"p_last", to_decimal(row.last, row.denominator, angle)},
                          {"sums_to_one", row.sums_to_one()}});
        }
      }
      j["transition_table"] = rows;
      json pts = json::array();
      for (const auto& r : s.samples) {
        pts.push_back({{"index", r.index},
                       {"lower", to_decimal(r.estimate.lower, 12)},
                       {"upper", to_decimal(r.estimate.upper, 12)},
                       {"bounds_ok", r.bounds_ok}});
      }
      j["points"] = pts;
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      std::vector<std::vector<std::string>> rows{
          {"index", "digits", "lower", "upper", "lower_last", "upper_last", "bounds_ok"}};
      for (const auto& r : s.samples) {
        rows.push_back({std::to_string(r.index), r.digits.label(), to_decimal(r.estimate.lower, 12),
                        to_decimal(r.estimate.upper, 12), to_decimal(r.estimate.lower_last, 12),
                        to_decimal(r.estimate.upper_last, 12), r.bounds_ok ? "true" : "false"});
      }
      return csv(rows);
    }
    case Format::text:
      break;
  }
  std::ostringstream os;
  os << "angle     " << angle.cf().describe() << "\n";
  os << "depth     " << K << "\n";
  os << "samples   " << n << "  (seed " << o.seed << ")\n\n";
  os << "r0 target          " << to_decimal(s.r0_target) << "\n";
  os << "r1 target          " << to_decimal(s.r1_target) << "\n";
  os << "median R_lower     " << to_decimal(s.median_lower) << "\n";
  os << "median R_upper     " << to_decimal(s.median_upper) << "\n";
  os << std::fixed << std::setprecision(4);
  os << "R_lower within " << o.eps << "  " << s.fraction_lower_within << "\n";
  os << "R_upper within " << o.eps << "  " << s.fraction_upper_within << "\n";
  os << "bound violations   " << s.bound_violations << "\n";
  return os.str();
}

// verify

std::string cmd_verify(const Options& o, bool& failed) {
  VerifyConfig c;
  c.max_length = o.n.value_or(500);
  c.jump_depth = o.depth.value_or(12);
  c.points = o.samples.value_or(100);
  c.seed = o.seed;
  c.exec = parse_exec(o.exec);
  if (o.fault == "eta") {
    c.corrupt_eta = true;
  } else if (!o.fault.empty()) {
    throw UsageError("unknown fault " + o.fault + " (eta)");
  }
  const Angle angle = make_angle(o, std::max<std::size_t>(c.jump_depth, c.extremal_depth) + 4);
  const auto report = verify_all(angle, c);
  failed = !report.passed();

  switch (parse_format(o.format)) {
    case Format::json: {
      json j = header("verify", angle);
      j["config"] = {{"max_length", c.max_length}, {"jump_depth", c.jump_depth},
                     {"points", c.points},         {"extremal_depth", c.extremal_depth},
                     {"coding_depth", c.coding_depth}, {"measure_depth", c.measure_depth},
                     {"seed", c.seed},             {"inject_fault", c.corrupt_eta ? "eta" : ""}};
      j["passed"] = report.passed();
      json suites = json::array();
      for (const auto& s : report.suites) suites.push_back(to_json(s));
      j["suites"] = suites;
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      std::vector<std::vector<std::string>> rows{{"suite", "passed", "checks", "failures"}};
      for (const auto& s : report.suites) {
        rows.push_back({s.name, s.passed() ? "true" : "false", std::to_string(s.checks),
                        std::to_string(s.failures)});
      }
      return csv(rows);
    }
    case Format::text:
      break;
  }
  std::ostringstream os;
  os << "angle  " << angle.cf().describe() << "\n";
  if (c.corrupt_eta) os << "fault  eta (printed recurrence)\n";
  os << "\n";
  for (const auto& s : report.suites) {
    os << pad(s.name, 10) << (s.passed() ? "pass" : "FAIL") << "  " << s.checks << " checks";
    if (!s.passed()) os << ", " << s.failures << " failures";
    os << "\n";
  }
  for (const auto& s : report.suites) {
    if (s.counterexample) os << "\nfirst counterexample (" << s.name << "):\n" << s.counterexample->dump() << "\n";
  }
  os << "\n" << (report.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

void add_angle(CLI::App* sub, Options& o) {
  sub->add_option("--cf", o.cf, "Partial quotients a_1,a_2,... (preamble)");
  sub->add_option("--period", o.period, "Repeating block of partial quotients");
  sub->add_option("--schedule", o.schedule, "Unbounded surrogate: linear (a_k = k) or power (a_k = 2^k)");
}

void add_output(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "text, json or csv")->capture_default_str();
  sub->add_option("--out", o.out, "Write the report to this file");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Return times of Sturmian shifts: exact partitions, jump times and rate constants"};
  app.name("sturmian");
  app.require_subcommand(1);
  Options o;

  auto* rates = app.add_subcommand("rates", "q_k table, r0/r1 estimates and the bound chain");
  add_angle(rates, o);
  rates->add_option("--depth", o.depth, "Depth K (default 30)");
  rates->add_option("--tol", o.tol, "Convergence tolerance for estimates")->capture_default_str();
  add_output(rates, o);

  auto* part = app.add_subcommand("partition", "Cells of I^n with words, J-labels and lengths");
  add_angle(part, o);
  part->add_option("--n", o.n, "Number of cut points after x0")->required();
  add_output(part, o);

  auto* tau = app.add_subcommand("tau", "Return time of a cylinder or cut interval by three methods");
  add_angle(tau, o);
  tau->add_option("--word", o.word, "Binary word u (\"-\" for the empty word)");
  tau->add_option("--cuts", o.cuts, "Interval [x_l, x_r) as l,r");
  add_output(tau, o);

  auto* jumps = app.add_subcommand("jumps", "Jump times r_k of a point of X_alpha");
  add_angle(jumps, o);
  jumps->add_option("--point", o.point, "Extremal point b, c or d");
  jumps->add_option("--digits", o.digits, "Digit word x_1,x_2,...");
  jumps->add_option("--depth", o.depth, "Depth K (default 12)");
  jumps->add_option("--tol", o.tol, "Convergence tolerance for estimates")->capture_default_str();
  add_output(jumps, o);

  auto* sample = app.add_subcommand("sample", "Sample the digit chain and summarise rate estimates");
  add_angle(sample, o);
  sample->add_option("--depth", o.depth, "Depth K (default 40)");
  sample->add_option("--samples", o.samples, "Number of points (default 500)");
  sample->add_option("--seed", o.seed, "Stream seed")->capture_default_str();
  sample->add_option("--eps", o.eps, "Concentration radius")->capture_default_str();
  sample->add_option("--exec", o.exec, "parallel or serial")->capture_default_str();
  add_output(sample, o);

  auto* verify = app.add_subcommand("verify", "Run every cross-oracle suite");
  add_angle(verify, o);
  verify->add_option("--n", o.n, "Words and partitions for n <= N (default 500)");
  verify->add_option("--depth", o.depth, "Jump depth K for sampled points (default 12)");
  verify->add_option("--samples", o.samples, "Sampled points (default 100)");
  verify->add_option("--seed", o.seed, "Stream seed")->capture_default_str();
  verify->add_option("--inject-fault", o.fault, "Negative control: eta");
  verify->add_option("--exec", o.exec, "parallel or serial")->capture_default_str();
  add_output(verify, o);

  std::vector<const char*> argv{"sturmian"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  bool failed = false;
  std::string report;
  try {
    if (*rates) {
      report = cmd_rates(o, failed);
    } else if (*part) {
      report = cmd_partition(o);
    } else if (*tau) {
      report = cmd_tau(o, failed);
    } else if (*jumps) {
      report = cmd_jumps(o, failed);
    } else if (*sample) {
      report = cmd_sample(o);
    } else {
      report = cmd_verify(o, failed);
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (o.out.empty()) {
    out << report;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return kExitUsage;
    }
    f << report;
  }
  return failed ? kExitFailure : kExitOk;
}

}  // namespace sturmian
