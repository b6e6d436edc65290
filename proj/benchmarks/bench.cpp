#include <benchmark/benchmark.h>

#include "wps/grading.hpp"
#include "wps/interpolation.hpp"

using namespace wps;

static void BM_HilbertTable(benchmark::State& state) {
  const Weights w{1, 2, 3, 5};
  for (auto _ : state) {
    HilbertTable t(w, state.range(0));
    benchmark::DoNotOptimize(t(state.range(0)));
  }
}
BENCHMARK(BM_HilbertTable)->Arg(1000)->Arg(100000);

static void BM_CountMonomials(benchmark::State& state) {
  const Weights w{1, 4, 57};
  for (auto _ : state) benchmark::DoNotOptimize(count_monomials(w, state.range(0)));
}
BENCHMARK(BM_CountMonomials)->Arg(75)->Arg(10000);

static void BM_BuildMatrix(benchmark::State& state) {
  const auto cfg = FatPointConfig::double_points({1, 2, 3}, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(build_evaluation_matrix(cfg, state.range(0)));
}
BENCHMARK(BM_BuildMatrix)->Args({14, 8})->Args({40, 50});

static void BM_DoublePointRank(benchmark::State& state) {
  const Weights w{1, 4, 57};
  const auto cfg = FatPointConfig::double_points(w, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_fat_points(cfg, state.range(0)).actual);
}
BENCHMARK(BM_DoublePointRank)->Args({50, 4})->Args({400, 60});

static void BM_DoublePointRankRational(benchmark::State& state) {
  Sampling s;
  s.field.kind = FieldSpec::Kind::rational;
  s.trials = 1;
  const auto cfg = FatPointConfig::double_points({1, 2, 3}, static_cast<std::size_t>(state.range(1)), s);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_fat_points(cfg, state.range(0)).actual);
}
BENCHMARK(BM_DoublePointRankRational)->Args({14, 8})->Args({24, 20});

BENCHMARK_MAIN();
