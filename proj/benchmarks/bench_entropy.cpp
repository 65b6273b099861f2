#include <benchmark/benchmark.h>

#include "rsspredict/entropy.hpp"
#include "rsspredict/predictability.hpp"
#include "rsspredict/synth.hpp"

namespace {

using namespace rsspredict;

void BM_LzParseReference(benchmark::State& state) {
  const auto trace = gen_iid_uniform(8, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(lz_parse(trace.levels));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LzParseReference)->RangeMultiplier(2)->Range(1 << 10, 1 << 13)->Complexity();

void BM_LzParseFast(benchmark::State& state) {
  const auto trace = gen_iid_uniform(8, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(lz_parse_fast(trace.levels));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LzParseFast)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity();

// Long repeats are the worst case for a naive matcher.
void BM_LzParseFastPeriodic(benchmark::State& state) {
  const std::vector<std::int32_t> pattern{0, 1, 2, 3, 4, 5, 6, 7};
  const auto trace = gen_periodic(pattern, static_cast<std::size_t>(state.range(0)) / 8);
  for (auto _ : state) benchmark::DoNotOptimize(lz_parse_fast(trace.levels));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LzParseFastPeriodic)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity();

void BM_BlockEntropyRate(benchmark::State& state) {
  const auto trace = gen_iid_uniform(2, 100000, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(block_entropy_rate(trace.levels, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_BlockEntropyRate)->Arg(1)->Arg(4)->Arg(8);

void BM_MaxPredictability(benchmark::State& state) {
  double e = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_predictability(e, 8));
    e = e > 2.9 ? 0.1 : e + 0.01;
  }
}
BENCHMARK(BM_MaxPredictability);

}  // namespace
