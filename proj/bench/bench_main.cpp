#include <benchmark/benchmark.h>

#include "dnfenum/core.hpp"
#include "dnfenum/runner.hpp"

using namespace dnfenum;

namespace {

Dnf instance(std::int64_t n) {
  return generate_dnf({GenKind::kRandom, static_cast<std::size_t>(n), 64, 4, 7});
}

void BM_BruteForceParallel(benchmark::State& st) {
  const Dnf d = instance(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(brute_force_models(d));
}

void BM_BruteForceSerial(benchmark::State& st) {
  const Dnf d = instance(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(brute_force_models_serial(d));
}

SweepSpec sweep_spec() {
  SweepSpec s;
  s.kind = GenKind::kRandom;
  s.ns = {12, 14};
  s.ms = {32, 128, 512};
  s.k = 4;
  s.run.algo = Algo::kAvg;
  return s;
}

void BM_SweepParallel(benchmark::State& st) {
  const auto s = sweep_spec();
  for (auto _ : st) benchmark::DoNotOptimize(sweep(s));
}

void BM_SweepSerial(benchmark::State& st) {
  const auto s = sweep_spec();
  for (auto _ : st) benchmark::DoNotOptimize(sweep_serial(s));
}

}  // namespace

BENCHMARK(BM_BruteForceParallel)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceSerial)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
