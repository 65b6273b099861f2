#include <benchmark/benchmark.h>

#include <thread>

#include "rsspredict/pipeline.hpp"
#include "rsspredict/synth.hpp"

namespace {

using namespace rsspredict;

SpectrumMatrix gaussian_matrix(std::size_t bands, std::size_t slots) {
  SpectrumMatrix m;
  m.rows.assign(slots, std::vector<double>(bands));
  for (std::size_t b = 0; b < bands; ++b) {
    BandMetadata band;
    band.center_freq_hz = 614e6 + 200e3 * static_cast<double>(b);
    band.label = "b" + std::to_string(b);
    m.bands.push_back(band);
    const auto trace = gen_gaussian_psd(slots, -110.0, 3.0, 1000 + b);
    for (std::size_t t = 0; t < slots; ++t) m.rows[t][b] = trace.samples[t];
  }
  return m;
}

void BM_AnalyzeWeek(benchmark::State& state) {
  const auto matrix = gaussian_matrix(static_cast<std::size_t>(state.range(0)), 3360);
  AnalysisConfig cfg;
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
  for (auto _ : state) benchmark::DoNotOptimize(analyze_matrix(matrix, cfg));
}
BENCHMARK(BM_AnalyzeWeek)->Arg(42)->Arg(420)->Unit(benchmark::kMillisecond);

void BM_BlockAverage(benchmark::State& state) {
  const auto matrix = gaussian_matrix(16, 100000);
  for (auto _ : state) benchmark::DoNotOptimize(block_average(matrix, 1000));
}
BENCHMARK(BM_BlockAverage)->Unit(benchmark::kMillisecond);

}  // namespace
