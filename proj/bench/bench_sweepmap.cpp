// Level recovery: literal rescanning version vs counter table, and the
// serial vs OpenMP exhaustive verifier.
#include <benchmark/benchmark.h>

#include "sweepmap/invert.hpp"
#include "sweepmap/sweep.hpp"
#include "sweepmap/verify.hpp"

namespace {

using namespace sweepmap;

SweepImage image_of_length(std::int64_t target_len) {
  const PathParams params(2, std::max<std::int64_t>(1, target_len / 3));
  return sweep_map(random_path(params, 7));
}

void BM_RecoverNaive(benchmark::State& state) {
  const SweepImage image = image_of_length(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(recover_levels_naive(image.sigma, image.params));
  state.SetComplexityN(state.range(0));
}

void BM_RecoverFast(benchmark::State& state) {
  const SweepImage image = image_of_length(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(recover_levels(image.sigma, image.params));
  state.SetComplexityN(state.range(0));
}

void BM_Sweep(benchmark::State& state) {
  const PathParams params(2, std::max<std::int64_t>(1, state.range(0) / 3));
  const DyckPath path = random_path(params, 7);
  for (auto _ : state) benchmark::DoNotOptimize(sweep_map(path));
}

void BM_SweepSorted(benchmark::State& state) {
  const PathParams params(2, std::max<std::int64_t>(1, state.range(0) / 3));
  const DyckPath path = random_path(params, 7);
  for (auto _ : state) benchmark::DoNotOptimize(sweep_map_sorted(path));
}

void BM_VerifySerial(benchmark::State& state) {
  const PathParams params(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_roundtrip(params));
}

void BM_VerifyParallel(benchmark::State& state) {
  const PathParams params(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_roundtrip_parallel(params));
}

}  // namespace

BENCHMARK(BM_RecoverNaive)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Complexity();
BENCHMARK(BM_RecoverFast)->RangeMultiplier(4)->Range(1 << 8, 1 << 18)->Complexity();
BENCHMARK(BM_Sweep)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_SweepSorted)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_VerifySerial)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
