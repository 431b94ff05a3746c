#include <benchmark/benchmark.h>

#include <random>

#include "cnbethe/representations.hpp"

using namespace cnbethe;

static void BM_RegularAction(benchmark::State& state) {
  const WeylGroup group(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> d;
  std::vector<Complex> v(group.order());
  for (auto& z : v) z = {d(rng), d(rng)};
  const auto g = group.element(group.order() / 2);
  for (auto _ : state) benchmark::DoNotOptimize(regular_action(group, g, v));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(group.order()));
}
BENCHMARK(BM_RegularAction)->DenseRange(2, 5);

static void BM_ApplyGenerator(benchmark::State& state) {
  const auto rep = Representation::regular(static_cast<int>(state.range(0)));
  std::vector<Complex> in(rep.dimension(), Complex(1.0, 0.5)), out(rep.dimension());
  for (auto _ : state) {
    rep.apply_generator(Generator::T(1), in, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_ApplyGenerator)->DenseRange(2, 5);

static void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Enumerate)->DenseRange(2, 5);
