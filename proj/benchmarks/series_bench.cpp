#include <benchmark/benchmark.h>

#include "eulerlab/generating_functions.hpp"
#include "eulerlab/series.hpp"
#include "eulerlab/verification.hpp"

using namespace eulerlab;

static void BM_SeriesMul(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const TruncatedSeries a = gf_class(PartitionClassId::A, order);
  const TruncatedSeries b = gf_class(PartitionClassId::B, order);
  for (auto _ : state) benchmark::DoNotOptimize(series_mul(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesMul)->RangeMultiplier(2)->Range(50, 800)->Complexity();

static void BM_SeriesReciprocal(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const TruncatedSeries a = pochhammer(PochSpec::infinite(1, 1, 1), order);
  for (auto _ : state) benchmark::DoNotOptimize(series_reciprocal(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesReciprocal)->RangeMultiplier(2)->Range(50, 800)->Complexity();

static void BM_ReciprocalByBinomials(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(reciprocal_pochhammer(PochSpec::infinite(1, 1, 1), order));
}
BENCHMARK(BM_ReciprocalByBinomials)->RangeMultiplier(2)->Range(50, 800);

static void BM_GfClass(benchmark::State& state) {
  const auto cls = static_cast<PartitionClassId>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gf_class(cls, 200));
}
BENCHMARK(BM_GfClass)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_ChainStage(benchmark::State& state) {
  const auto stage = static_cast<ChainStage>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gf_c_chain_stage(stage, 200));
}
BENCHMARK(BM_ChainStage)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_VerifyThmAll(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_identity(IdentityName::thm_all, 200));
}
BENCHMARK(BM_VerifyThmAll)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
