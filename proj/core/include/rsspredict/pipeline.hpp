#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rsspredict/ingest.hpp"
#include "rsspredict/quantize.hpp"
#include "rsspredict/trace.hpp"

namespace rsspredict {

struct AnalysisConfig {
  QuantizationConfig quantization;
  std::size_t block = 1;
  AveragingDomain averaging = AveragingDomain::Linear;
  unsigned jobs = 1;
};

struct BandAnalysis {
  BandMetadata band;
  EntropyReport entropy;
  PredictabilityReport predictability;
};

/// quantize -> entropy_report -> max_predictability for one trace.
BandAnalysis analyze_trace(const PsdTrace& trace, const QuantizationConfig& cfg);

/// Block-averages the matrix, then analyzes every band on up to `jobs`
/// threads. Results are ordered by centre frequency regardless of
/// scheduling. If several bands fail, the error of the first band in input
/// order is rethrown.
std::vector<BandAnalysis> analyze_matrix(const SpectrumMatrix& matrix, const AnalysisConfig& cfg);

/// Whether duty cycles are taken on the raw slots or after block averaging.
enum class DutyCycleOrder { Raw, Averaged };

std::vector<DutyCycleReport> duty_cycle_table(const SpectrumMatrix& matrix,
                                              std::span<const double> thresholds_dbm,
                                              std::size_t block, DutyCycleOrder order,
                                              AveragingDomain averaging = AveragingDomain::Linear);

}  // namespace rsspredict
