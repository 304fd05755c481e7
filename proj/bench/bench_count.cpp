// Parallel dense kernel against the serial sparse reference.
#include "aztec/count.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_CountParallel(benchmark::State& state) {
  const aztec::Diamond d(static_cast<int>(state.range(0)));
  const auto cfg = aztec::BarrierConfig::all_zip(d.spine_length());
  for (auto _ : state) benchmark::DoNotOptimize(aztec::count_tilings(d, cfg));
}

void BM_CountSerial(benchmark::State& state) {
  const aztec::Diamond d(static_cast<int>(state.range(0)));
  const auto cfg = aztec::BarrierConfig::all_zip(d.spine_length());
  for (auto _ : state) benchmark::DoNotOptimize(aztec::serial::count_tilings(d, cfg));
}

void BM_CountParallelBarriers(benchmark::State& state) {
  const aztec::Diamond d(static_cast<int>(state.range(0)));
  std::vector<aztec::Mark> marks(d.spine_length(), aztec::Mark::Zip);
  for (int p = 2; p <= d.spine_length(); p += 2) marks[p - 1] = p % 4 == 0 ? aztec::Mark::Zag : aztec::Mark::Zig;
  const aztec::BarrierConfig cfg(marks);
  for (auto _ : state) benchmark::DoNotOptimize(aztec::count_tilings(d, cfg));
}

}  // namespace

BENCHMARK(BM_CountParallel)->DenseRange(2, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountSerial)->DenseRange(2, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallelBarriers)->DenseRange(2, 9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
