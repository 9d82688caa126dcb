#include <benchmark/benchmark.h>

#include <random>

#include "sturmian/measure.hpp"
#include "sturmian/rotation.hpp"
#include "sturmian/verify.hpp"

using namespace sturmian;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_EmpiricalRates(benchmark::State& state) {
  const Angle g(ContinuedFraction::golden());
  for (auto _ : state) {
    benchmark::DoNotOptimize(empirical_rates(g, 40, 500, 1, mode(state)));
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_EmpiricalRates)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifyTau(benchmark::State& state) {
  const Angle s(ContinuedFraction::silver());
  VerifyConfig c;
  c.max_length = 200;
  c.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(verify_tau(s, c));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_VerifyTau)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

std::vector<CircleInterval> random_intervals(const Angle& angle, std::size_t count) {
  std::mt19937_64 gen(5);
  std::vector<CircleInterval> out;
  while (out.size() < count) {
    const std::uint64_t l = gen() % 20000;
    const std::uint64_t r = gen() % 20000;
    if (l != r) out.push_back(CircleInterval::between_cuts(angle, l, r));
  }
  return out;
}

void BM_ReturnLinearWalk(benchmark::State& state) {
  const Angle g(ContinuedFraction::golden());
  const auto intervals = random_intervals(g, 200);
  for (auto _ : state) {
    for (const auto& I : intervals) benchmark::DoNotOptimize(tau_interval_bruteforce(I, g));
  }
}
BENCHMARK(BM_ReturnLinearWalk)->Unit(benchmark::kMillisecond);

void BM_ReturnRecords(benchmark::State& state) {
  const Angle g(ContinuedFraction::golden());
  const auto intervals = random_intervals(g, 200);
  const ReturnRecords records(g, 1000000);
  for (auto _ : state) {
    for (const auto& I : intervals) benchmark::DoNotOptimize(records.first_return(I.length()));
  }
}
BENCHMARK(BM_ReturnRecords)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
