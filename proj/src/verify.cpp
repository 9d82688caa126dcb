#include "sturmian/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "sturmian/coding.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/language.hpp"
#include "sturmian/rotation.hpp"

namespace sturmian {

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.passed(); });
}

EtaSequence corrupted_eta(const Angle& angle) {
  return [angle](long k) {
    LinearForm prev = LinearForm::one();
    LinearForm cur = LinearForm::alpha();
    if (k == -1) return prev;
    for (long i = 0; i < k; ++i) {
      LinearForm next = cur * Integer(angle.digit(static_cast<std::size_t>(i) + 1)) - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  };
}

namespace {

/// Per-index tally; merged in index order.
struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::optional<json> first;

  void check(bool ok, const std::function<json()>& detail) {
    ++checks;
    if (ok) return;
    ++failures;
    if (!first) first = detail();
  }
};

using Clock = std::chrono::steady_clock;

SuiteResult run_suite(const std::string& name, std::size_t count, Execution exec,
                      const std::function<void(std::size_t, Tally&)>& body) {
  const auto start = Clock::now();
  std::vector<Tally> tallies(count);
  auto guarded = [&](std::size_t i) {
    try {
      body(i, tallies[i]);
    } catch (const std::exception& e) {
      tallies[i].check(false, [&] { return json{{"index", i}, {"exception", e.what()}}; });
    }
  };
  if (exec == Execution::parallel) {
    const auto n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) guarded(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < count; ++i) guarded(i);
  }
  SuiteResult r;
  r.name = name;
  for (auto& t : tallies) {
    r.checks += t.checks;
    r.failures += t.failures;
    if (!r.counterexample && t.first) r.counterexample = std::move(t.first);
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

KleinRule make_rule(const Angle& angle, const VerifyConfig& config) {
  if (config.corrupt_eta) return KleinRule(angle, corrupted_eta(angle));
  return KleinRule(angle);
}

EtaSequence make_eta(const Angle& angle, const VerifyConfig& config) {
  if (config.corrupt_eta) return corrupted_eta(angle);
  return [angle](long k) { return angle.eta(k); };
}

void warm(const Angle& angle, std::size_t n) {
  angle.q(scale_index(n, angle) + 4);
}

}  // namespace

SuiteResult verify_tau(const Angle& angle, const VerifyConfig& config) {
  warm(angle, config.max_length);
  const KleinRule rule = make_rule(angle, config);
  return run_suite("tau", config.max_length + 1, config.exec, [&](std::size_t n, Tally& t) {
    const std::size_t window = occurrence_window(n, angle);
    const auto prefix = generate_prefix(angle, window);
    for (const auto& cell : partition(n, angle)) {
      const Integer f = rule.tau(cell.interval);
      const std::uint64_t b = tau_interval_bruteforce(cell.interval, angle);
      const std::uint64_t o = min_occurrence_gap(prefix.bits, cell.word, window);
      t.check(f == b && b == o, [&] {
        return json{{"n", n},
                    {"word", cell.word},
                    {"interval", to_json(cell.interval, angle)},
                    {"formula", to_json(f)},
                    {"bruteforce", b},
                    {"word_oracle", o}};
      });
    }
  });
}

SuiteResult verify_partition(const Angle& angle, const VerifyConfig& config) {
  warm(angle, config.max_length);
  std::map<std::size_t, long> two_length;  // n = q_k - 1 -> k
  std::vector<std::size_t> ns(config.max_length + 1);
  std::iota(ns.begin(), ns.end(), std::size_t{0});
  for (long k = 1; k <= static_cast<long>(config.coding_depth); ++k) {
    const auto n = (angle.q(k) - 1).convert_to<std::size_t>();
    two_length[n] = k;
    if (n > config.max_length && ns.back() != n) ns.push_back(n);
  }
  const auto eta = make_eta(angle, config);
  return run_suite("partition", ns.size(), config.exec, [&](std::size_t i, Tally& t) {
    const std::size_t n = ns[i];
    const auto cells = partition(n, angle);
    std::vector<std::string> words;
    LinearForm total;
    std::vector<LinearForm> lengths;
    for (const auto& c : cells) {
      words.push_back(c.word);
      total += c.interval.length();
      if (std::find(lengths.begin(), lengths.end(), c.interval.length()) == lengths.end()) {
        lengths.push_back(c.interval.length());
      }
    }
    std::sort(words.begin(), words.end());
    const auto lang = language(n, angle);
    t.check(words == lang && words.size() == n + 1,
            [&] { return json{{"n", n}, {"partition_words", words}, {"language", lang}}; });
    t.check(lengths.size() <= 3 && total == LinearForm::one(), [&] {
      json ls = json::array();
      for (const auto& l : lengths) ls.push_back(to_json(l, angle));
      return json{{"n", n}, {"lengths", ls}, {"total", to_json(total, angle)}};
    });
    if (auto it = two_length.find(n); it != two_length.end() && n > 0) {
      const long k = it->second;
      std::vector<LinearForm> expected{eta(k - 1), eta(k - 1) + eta(k)};
      const bool ok = lengths.size() == 2 &&
                      std::is_permutation(lengths.begin(), lengths.end(), expected.begin());
      t.check(ok, [&] {
        json ls = json::array();
        for (const auto& l : lengths) ls.push_back(to_json(l, angle));
        return json{{"n", n}, {"k", k}, {"lengths", ls},
                    {"expected", {to_json(expected[0], angle), to_json(expected[1], angle)}}};
      });
    }
    if (n <= 64) {
      for (const auto& c : cells) {
        const auto cyl = cylinder_interval(c.word, angle);
        t.check(cyl == c.interval, [&] {
          return json{{"n", n}, {"word", c.word}, {"cell", to_json(c.interval, angle)},
                      {"cylinder", to_json(cyl, angle)}};
        });
      }
    }
  });
}

SuiteResult verify_coding(const Angle& angle, const VerifyConfig& config) {
  const auto eta = make_eta(angle, config);
  return run_suite("coding", config.coding_depth + 1, config.exec, [&](std::size_t k, Tally& t) {
    const auto kk = static_cast<long>(k);
    const std::size_t n = (angle.q(kk) - 1).convert_to<std::size_t>();
    const auto cells = partition(n, angle);
    std::map<std::pair<std::uint64_t, std::uint64_t>, const Cell*> by_cuts;
    for (const auto& c : cells) {
      const auto key = c.interval.is_full()
                           ? std::pair<std::uint64_t, std::uint64_t>{0, 0}
                           : std::pair{*c.interval.left_cut(), *c.interval.right_cut()};
      by_cuts[key] = &c;
    }
    const auto words = digit_language(k, angle);
    t.check(words.size() == cells.size(), [&] {
      return json{{"k", k}, {"digit_words", words.size()}, {"cells", cells.size()}};
    });
    for (const auto& u : words) {
      JCursor cur(angle);
      for (auto d : u.digits()) cur.push(d);
      const auto J = cur.interval();
      const auto key = J.is_full() ? std::pair<std::uint64_t, std::uint64_t>{0, 0}
                                   : std::pair{*J.left_cut(), *J.right_cut()};
      const auto it = by_cuts.find(key);
      const Cell* cell = it == by_cuts.end() ? nullptr : it->second;
      t.check(cell != nullptr && cell->interval == J, [&] {
        return json{{"k", k}, {"u", u.label()}, {"J", to_json(J, angle)}, {"cell", nullptr}};
      });
      if (cell == nullptr) continue;
      const auto g = gamma_encode(cell->word, k, angle);
      t.check(g == u, [&] {
        return json{{"k", k}, {"u", u.label()}, {"word", cell->word}, {"gamma", g.label()}};
      });
      // |J_u| from the eta table.
      LinearForm expected = LinearForm::one();
      if (k > 0) {
        expected = u[k] < angle.digit(k) ? eta(kk - 1) : eta(kk - 1) + eta(kk);
      }
      t.check(expected == J.length(), [&] {
        return json{{"k", k}, {"u", u.label()}, {"length", to_json(J.length(), angle)},
                    {"expected", to_json(expected, angle)}};
      });
      // Children tile J_u.
      if (k < config.coding_depth) {
        LinearForm sum;
        bool inside = true;
        const std::uint64_t first = (k > 0 && u[k] == angle.digit(k)) ? 0 : 1;
        for (std::uint64_t d = first; d <= angle.digit(k + 1); ++d) {
          JCursor child = cur;
          child.push(d);
          const auto C = child.interval();
          sum += C.length();
          inside = inside && intersect(C, J, angle) == C;
        }
        t.check(inside && sum == J.length(), [&] {
          return json{{"k", k}, {"u", u.label()}, {"children_total", to_json(sum, angle)},
                      {"children_inside", inside}};
        });
      }
    }
  });
}

SuiteResult verify_jumps(const Angle& angle, const VerifyConfig& config) {
  const std::size_t K = config.jump_depth;
  const std::size_t length = definition_prefix_length(K, angle);
  angle.q(static_cast<long>(K) + 3);
  const KleinRule rule = make_rule(angle, config);
  return run_suite("jumps", config.points, config.exec, [&](std::size_t i, Tally& t) {
    const auto x = sample_point(angle, K + 2, config.seed, i);
    JCursor cur(angle);
    for (auto d : x.digits()) cur.push(d);
    const LinearForm y = cur.interval().is_full() ? LinearForm::zero() : cur.interval().left();
    const auto prefix = generate_prefix(angle, y, length);
    const auto def = jumps_by_definition(prefix.bits, K, angle, rule);

    GammaEncoder enc(angle);
    for (std::size_t j = 0; j < prefix.size(); ++j) enc.push(prefix.bits[j]);
    const auto& gx = enc.digits();
    t.check(gx.size() >= K + 1 && gx.prefix(K + 1) == x.prefix(K + 1), [&] {
      return json{{"point", i}, {"sampled", to_json(x)}, {"gamma", to_json(gx)}};
    });
    const auto formula = jumps_by_formula(gx, K, angle);
    t.check(def.r == formula.r, [&] {
      return json{{"point", i}, {"digits", to_json(gx)}, {"definition", to_json(def)},
                  {"formula", to_json(formula)}};
    });
    const auto v = formula.bound_violation();
    t.check(!v.has_value(), [&] {
      return json{{"point", i}, {"k", *v}, {"profile", to_json(formula)}};
    });
  });
}

SuiteResult verify_extremal(const Angle& angle, const VerifyConfig& config) {
  const std::size_t K = config.extremal_depth;
  return run_suite("extremal", 3, Execution::serial, [&](std::size_t which, Tally& t) {
    const auto kind = static_cast<ExtremalPoint>(which);
    const auto x = extremal_point(kind, K + 1, angle);
    const auto p = jumps_by_formula(x, K, angle);
    const char* name = which == 0 ? "b" : (which == 1 ? "c" : "d");
    for (std::size_t k = 0; k <= K; ++k) {
      const auto kk = static_cast<long>(k);
      std::optional<Integer> expected;
      switch (kind) {
        case ExtremalPoint::b:
          expected = angle.q(kk + 1) + angle.q(kk) - 1;
          break;
        case ExtremalPoint::c:
          expected = angle.q(k % 2 == 0 ? kk : kk + 1);
          break;
        case ExtremalPoint::d:
          expected = angle.q(k % 2 == 0 ? kk + 1 : kk);
          break;
      }
      if (!expected) continue;
      t.check(p.r[k] == *expected, [&] {
        return json{{"point", name}, {"k", k}, {"r_k", to_json(p.r[k])},
                    {"expected", to_json(*expected)}};
      });
    }
  });
}

SuiteResult verify_measure(const Angle& angle, const VerifyConfig& config) {
  const auto eta = make_eta(angle, config);
  return run_suite("measure", config.measure_depth + 1, config.exec, [&](std::size_t k, Tally& t) {
    for (bool after_max : {false, true}) {
      if (k == 0 && after_max) continue;
      const auto row = transition_row(k, after_max, angle, eta);
      t.check(row.sums_to_one(), [&] {
        return json{{"k", k},
                    {"after_max", after_max},
                    {"small", to_json(row.small, angle)},
                    {"last", to_json(row.last, angle)},
                    {"denominator", to_json(row.denominator, angle)}};
      });
    }
    for (const auto& u : digit_language(k, angle)) {
      const auto p = path_probability(u, angle, eta);
      JCursor cur(angle);
      for (auto d : u.digits()) cur.push(d);
      const auto len = cur.interval().length();
      t.check(p && *p == len, [&] {
        return json{{"k", k}, {"u", u.label()},
                    {"probability", p ? to_json(*p, angle) : json("does not telescope")},
                    {"J_length", to_json(len, angle)}};
      });
    }
  });
}

VerifyReport verify_all(const Angle& angle, const VerifyConfig& config) {
  VerifyReport r;
  r.suites.push_back(verify_tau(angle, config));
  r.suites.push_back(verify_partition(angle, config));
  r.suites.push_back(verify_coding(angle, config));
  r.suites.push_back(verify_jumps(angle, config));
  r.suites.push_back(verify_extremal(angle, config));
  r.suites.push_back(verify_measure(angle, config));
  return r;
}

json to_json(const SuiteResult& s) {
  json j = {{"suite", s.name},
            {"passed", s.passed()},
            {"checks", s.checks},
            {"failures", s.failures}};
  j["counterexample"] = s.counterexample ? *s.counterexample : json(nullptr);
  return j;
}

}  // namespace sturmian
