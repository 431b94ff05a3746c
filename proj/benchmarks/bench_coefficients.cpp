#include <benchmark/benchmark.h>

#include "cnbethe/bethe_wavefunction.hpp"

using namespace cnbethe;

namespace {

Momenta momenta(int n) {
  std::vector<double> k;
  for (int j = 0; j < n; ++j) k.push_back(0.4 + 0.55 * j);
  return Momenta(k);
}

}  // namespace

static void BM_CoefficientsScalar(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto k = momenta(n);
  const auto rep = Representation::scalar(n, {1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(compute_coefficients(k, ModelSpec::delta(1.0, 2.0), rep));
}
BENCHMARK(BM_CoefficientsScalar)->DenseRange(1, 5);

static void BM_CoefficientsRegular(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto k = momenta(n);
  const auto rep = Representation::regular(n);
  for (auto _ : state) benchmark::DoNotOptimize(compute_coefficients(k, ModelSpec::delta(1.0, 2.0), rep));
}
BENCHMARK(BM_CoefficientsRegular)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_EvaluatePsi(benchmark::State& state) {
  const auto c = compute_coefficients(momenta(3), ModelSpec::delta(1.0, 2.0), Representation::scalar(3, {1, 1}));
  const std::vector<double> x{0.3, 1.2, 2.1};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_psi(c, x));
}
BENCHMARK(BM_EvaluatePsi);
