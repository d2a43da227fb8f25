#include <benchmark/benchmark.h>

#include "eulerlab/bijections.hpp"
#include "eulerlab/counting.hpp"
#include "eulerlab/enumerate.hpp"

using namespace eulerlab;

static void BM_ForEachPartition(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    std::uint64_t seen = 0;
    for_each_partition(n, [&](std::span<const Part>) { ++seen; });
    benchmark::DoNotOptimize(seen);
  }
}
BENCHMARK(BM_ForEachPartition)->Arg(30)->Arg(45)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_CountByEnumeration(benchmark::State& state) {
  const auto cls = static_cast<PartitionClassId>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_by_enumeration(50, cls));
}
BENCHMARK(BM_CountByEnumeration)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_DynamicProgram(benchmark::State& state) {
  const auto cls = static_cast<PartitionClassId>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dp_counts(cls, 200));
}
BENCHMARK(BM_DynamicProgram)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_CToBRoundTrip(benchmark::State& state) {
  const auto members = enumerate_class(40, PartitionClassId::C);
  for (auto _ : state)
    for (const Partition& p : members) benchmark::DoNotOptimize(b_to_c(c_to_b(p)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(members.size()));
}
BENCHMARK(BM_CToBRoundTrip);

BENCHMARK_MAIN();
