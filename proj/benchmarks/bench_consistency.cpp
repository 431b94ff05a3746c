#include <benchmark/benchmark.h>

#include "cnbethe/consistency.hpp"

using namespace cnbethe;

static void BM_BraidRegular(benchmark::State& state) {
  const auto rep = Representation::regular(3);
  const auto spec = ModelSpec::delta(1.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(check_braid(spec, rep, 0.7, 1.3));
}
BENCHMARK(BM_BraidRegular);

static void BM_ReflectionRegular(benchmark::State& state) {
  const auto rep = Representation::regular(3);
  const auto spec = ModelSpec::delta(1.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(check_reflection(spec, rep, 0.7, 1.3));
}
BENCHMARK(BM_ReflectionRegular);

static void BM_Report(benchmark::State& state) {
  const auto rep = Representation::regular(3);
  const auto spec = ModelSpec::delta(1.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(consistency_report(spec, rep, 20, 7));
}
BENCHMARK(BM_Report)->Unit(benchmark::kMillisecond);
