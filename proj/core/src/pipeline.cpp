#include "rsspredict/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "rsspredict/entropy.hpp"
#include "rsspredict/error.hpp"
#include "rsspredict/predictability.hpp"

namespace rsspredict {

BandAnalysis analyze_trace(const PsdTrace& trace, const QuantizationConfig& cfg) {
  const auto validated = validate_trace(trace);
  const auto qt = quantize(validated, cfg);
  BandAnalysis out;
  out.band = trace.band;
  out.entropy = entropy_report(qt);
  out.predictability = max_predictability(out.entropy.e_actual, qt.q);
  return out;
}

std::vector<BandAnalysis> analyze_matrix(const SpectrumMatrix& matrix, const AnalysisConfig& cfg) {
  validate_config(cfg.quantization);
  const auto averaged = block_average(matrix, cfg.block, cfg.averaging);
  const std::size_t bands = averaged.num_bands();

  std::vector<BandAnalysis> results(bands);
  std::vector<std::exception_ptr> failures(bands);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto b = next.fetch_add(1); b < bands; b = next.fetch_add(1)) {
      try {
        results[b] = analyze_trace(band_trace(averaged, b), cfg.quantization);
      } catch (...) {
        failures[b] = std::current_exception();
      }
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(cfg.jobs, 1, std::max<std::size_t>(bands, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  std::stable_sort(results.begin(), results.end(), [](const auto& a, const auto& b) {
    return a.band.center_freq_hz < b.band.center_freq_hz;
  });
  return results;
}

std::vector<DutyCycleReport> duty_cycle_table(const SpectrumMatrix& matrix,
                                              std::span<const double> thresholds_dbm,
                                              std::size_t block, DutyCycleOrder order,
                                              AveragingDomain averaging) {
  const auto source =
      order == DutyCycleOrder::Averaged ? block_average(matrix, block, averaging) : matrix;
  std::vector<DutyCycleReport> reports;
  reports.reserve(thresholds_dbm.size());
  for (double t : thresholds_dbm) reports.push_back(duty_cycle(source, t));
  return reports;
}

}  // namespace rsspredict
