#include <benchmark/benchmark.h>

#include <random>

#include "cvent/bell.hpp"
#include "cvent/circuits.hpp"
#include "cvent/criteria.hpp"
#include "cvent/gaussian_state.hpp"

static void BM_FamilyState(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvent::make_family_state({n, 0.7, 0.7}));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_FamilyState)->DenseRange(2, 8, 2)->Complexity();

static void BM_Wigner(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cvent::GaussianState family = cvent::make_family_state({n, 0.5, 0.5});
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  Eigen::VectorXd point(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    point(i) = coord(rng);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(family.wigner(point));
  }
}
BENCHMARK(BM_Wigner)->DenseRange(2, 8, 2);

static void BM_CritVarianceSum(benchmark::State& state) {
  const cvent::GaussianState family =
      cvent::make_family_state({static_cast<int>(state.range(0)), 0.5, 0.5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvent::crit_variance_sum(family));
  }
}
BENCHMARK(BM_CritVarianceSum)->DenseRange(2, 8, 2);

static void BM_BellValue(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cvent::GaussianState family = cvent::make_family_state({n, 0.8, 0.8});
  const cvent::BellCombination combo = cvent::mermin_combination(n);
  const cvent::DisplacementSettings settings =
      cvent::DisplacementSettings::equal(n, 0.05, 1.5707963267948966);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvent::bell_value(family, combo, settings));
  }
}
BENCHMARK(BM_BellValue)->DenseRange(2, 5, 1);

static void BM_MaximizeBell(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvent::maximize_bell(n, 2.0));
  }
}
BENCHMARK(BM_MaximizeBell)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
