// Acceptance checks. Prints one line per criterion; with an argument N runs
// only criterion N. Exit status is 0 iff every selected criterion passes.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sturmian/cli.hpp"
#include "sturmian/decimal.hpp"
#include "sturmian/measure.hpp"
#include "sturmian/rates.hpp"
#include "sturmian/verify.hpp"

using namespace sturmian;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct NamedCf {
  const char* name;
  ContinuedFraction cf;
};

std::vector<NamedCf> core_angles() {
  return {{"golden", ContinuedFraction::golden()},
          {"silver", ContinuedFraction::silver()},
          {"[0;(2,3)]", ContinuedFraction::periodic({}, {2, 3})}};
}

std::string fmt(double v, int digits = 4) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome suite_over(const std::vector<NamedCf>& angles,
                   const std::function<SuiteResult(const Angle&)>& run) {
  Outcome o{true, ""};
  for (const auto& a : angles) {
    const auto r = run(Angle(a.cf));
    o.pass = o.pass && r.passed();
    o.detail += std::string(o.detail.empty() ? "" : ", ") + a.name + " " + std::to_string(r.checks) +
                " checks/" + std::to_string(r.failures) + " failures";
    if (r.counterexample) o.detail += " first " + r.counterexample->dump();
  }
  return o;
}

Outcome c1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rc = rate_constants(Angle(ContinuedFraction::golden()), 30);
  const HighPrecision sqrt5 = sqrt(HighPrecision(5));
  const HighPrecision e0 = abs(to_high_precision(rc.r0_estimate) - (3 - sqrt5) / 2);
  const HighPrecision e1 = abs(to_high_precision(rc.r1_estimate) - (1 + sqrt5) / 2);
  const double t = seconds_since(t0);
  const bool ok = e0 < HighPrecision("1e-6") && e1 < HighPrecision("1e-6") && t < 1.0;
  return {ok, "r0 " + to_decimal(rc.r0_estimate, 12) + " (err " + to_decimal(e0, 3) + "), r1 " +
                  to_decimal(rc.r1_estimate, 12) + " (err " + to_decimal(e1, 3) + "), " + fmt(t) + " s"};
}

Outcome c2() {
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream out, err;
  const int code =
      run_cli({"partition", "--cf", "2,3", "--period", "3", "--n", "6", "--format", "csv"}, out, err);
  const double t = seconds_since(t0);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  std::vector<std::string> words, labels;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string w, l;
    std::getline(fields, w, ',');
    std::getline(fields, l, ',');
    words.push_back(w);
    labels.push_back(l);
  }
  const std::vector<std::string> ew{"001010", "010010", "010100", "010101", "100101", "101001", "101010"};
  const std::vector<std::string> el{"20", "21", "22", "23", "11", "12", "13"};
  std::string got;
  for (std::size_t i = 0; i < words.size(); ++i) got += (i ? " " : "") + words[i] + "/" + labels[i];
  return {code == 0 && words == ew && labels == el && t < 1.0, got + ", " + fmt(t) + " s"};
}

Outcome c3() {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyConfig c;
  c.max_length = 500;
  auto o = suite_over(core_angles(), [&](const Angle& a) { return verify_tau(a, c); });
  const double t = seconds_since(t0);
  o.pass = o.pass && t < 60.0;
  o.detail += ", " + fmt(t) + " s";
  return o;
}

Outcome c4() {
  VerifyConfig c;
  c.jump_depth = 12;
  c.points = 100;
  return suite_over(core_angles(), [&](const Angle& a) { return verify_jumps(a, c); });
}

Outcome c5() {
  VerifyConfig c;
  c.extremal_depth = 20;
  auto angles = core_angles();
  angles.push_back({"[0;2,(3)]", ContinuedFraction::periodic({2}, {3})});
  return suite_over(angles, [&](const Angle& a) { return verify_extremal(a, c); });
}

Outcome c6() {
  VerifyConfig c;
  c.max_length = 500;
  c.coding_depth = 8;
  return suite_over(core_angles(), [&](const Angle& a) { return verify_partition(a, c); });
}

Outcome c7() {
  VerifyConfig c;
  c.measure_depth = 6;
  return suite_over(core_angles(), [&](const Angle& a) { return verify_measure(a, c); });
}

Outcome c8() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto s = empirical_rates(Angle(ContinuedFraction::golden()), 40, 500, 1);
  const double t = seconds_since(t0);
  const bool ok = s.fraction_lower_within >= 0.95 && s.fraction_upper_within >= 0.95 && t < 30.0;
  return {ok, "R_lower within 0.05 of r0: " + fmt(100 * s.fraction_lower_within) +
                  "%, R_upper within 0.05 of r1: " + fmt(100 * s.fraction_upper_within) +
                  "% (need 95% each), " + fmt(t) + " s"};
}

Outcome c9() {
  const Angle angle(ContinuedFraction::linear_schedule(100));
  std::vector<Rational> lo, hi;
  std::string detail;
  for (std::size_t K : {20, 30, 40}) {
    const auto s = empirical_rates(angle, K, 200, 1);
    lo.push_back(s.median_lower);
    hi.push_back(s.median_upper);
    detail += (detail.empty() ? "" : "; ") + std::string("K=") + std::to_string(K) + " median R_lower " +
              to_decimal(s.median_lower, 4) + ", R_upper " + to_decimal(s.median_upper, 4);
  }
  const bool lower_ok = lo[0] > lo[1] && lo[1] > lo[2] && lo[2] < Rational(1, 20);
  const bool upper_ok = hi[0] < hi[1] && hi[1] < hi[2] && hi[2] > 20;
  detail += std::string(" (lower trend ") + (lower_ok ? "ok" : "fails") + ", upper trend " +
            (upper_ok ? "ok" : "fails: needs > 20 at K=40") + ")";
  return {lower_ok && upper_ok, detail};
}

Outcome c10() {
  const std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> cfs{
      {{}, {1}},       {{}, {2}},       {{}, {3}},       {{}, {4}},       {{}, {5}},
      {{}, {1, 2}},    {{}, {1, 3}},    {{}, {1, 4}},    {{}, {1, 5}},    {{}, {2, 3}},
      {{}, {2, 5}},    {{}, {3, 4}},    {{}, {4, 5}},    {{}, {1, 1, 2}}, {{}, {1, 2, 3}},
      {{}, {2, 2, 5}}, {{}, {1, 5, 5}}, {{}, {3, 1, 4}}, {{3}, {1}},      {{5, 2}, {1, 4}}};
  int failures = 0;
  HighPrecision worst = 0;
  std::string first;
  for (const auto& [pre, per] : cfs) {
    const Angle angle(ContinuedFraction::periodic(pre, per));
    const auto rc = rate_constants(angle, 40);
    const bool ok = rc.M <= 5 && rc.chain_holds() && rc.identity_error &&
                    *rc.identity_error < HighPrecision("1e-9");
    if (rc.identity_error && *rc.identity_error > worst) worst = *rc.identity_error;
    if (!ok) {
      ++failures;
      if (first.empty()) first = angle.cf().describe();
    }
  }
  std::string detail = std::to_string(cfs.size()) + " angles, " + std::to_string(failures) +
                       " failures, worst |r1 - (1/r0 - 1)| " + to_decimal(worst, 3);
  if (!first.empty()) detail += ", first failing " + first;
  return {failures == 0, detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
  std::size_t from = 1, to = criteria.size();
  if (argc > 1) {
    from = to = std::strtoul(argv[1], nullptr, 10);
    if (from < 1 || from > criteria.size()) {
      std::cerr << "usage: acceptance [1-" << criteria.size() << "]\n";
      return 2;
    }
  }
  bool all = true;
  for (std::size_t i = from; i <= to; ++i) {
    Outcome o;
    try {
      o = criteria[i - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << std::setw(2) << i << ": " << (o.pass ? "PASS" : "FAIL") << "  "
              << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
