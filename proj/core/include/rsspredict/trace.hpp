#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rsspredict {

/// Nominal resolution bandwidth of one measured band.
inline constexpr double kDefaultBandwidthHz = 200e3;
/// Nominal inter-sample time after preprocessing (about three minutes).
inline constexpr double kDefaultSampleIntervalS = 180.0;

struct BandMetadata {
  double center_freq_hz = 0.0;
  double bandwidth_hz = kDefaultBandwidthHz;
  std::string label;
  std::optional<std::string> service;

  bool operator==(const BandMetadata&) const = default;
};

/// Power samples of one band in acquisition order, dBm per 200 kHz.
struct PsdTrace {
  BandMetadata band;
  std::vector<double> samples;
  double sample_interval_s = kDefaultSampleIntervalS;

  bool operator==(const PsdTrace&) const = default;
};

/// RSS level sequence over the alphabet {0, ..., q-1}.
///
/// `q` is carried explicitly so a constant trace keeps its intended alphabet
/// size. `bin_edges` holds the interior quantizer edges (dBm) when the trace
/// came out of `quantize`; it is empty for synthetic traces and degenerate
/// bands.
struct QuantizedTrace {
  BandMetadata band;
  std::vector<std::int32_t> levels;
  std::int32_t q = 1;
  std::vector<double> bin_edges;

  bool operator==(const QuantizedTrace&) const = default;
};

/// Empirical level frequencies p_0..p_{q-1}.
struct LevelDistribution {
  std::vector<double> probabilities;

  bool operator==(const LevelDistribution&) const = default;
};

/// Entropy measures of one band, all in bits (per symbol).
struct EntropyReport {
  double e_rand = 0.0;
  double e_unc = 0.0;
  double e_actual = 0.0;
  std::size_t n = 0;
  std::int32_t q = 1;

  bool operator==(const EntropyReport&) const = default;
};

/// Upper bound on next-state prediction accuracy for one band.
struct PredictabilityReport {
  double pi_max = 1.0;
  /// Entropy actually fed to the solver, after clamping into [0, log2 q].
  double entropy_used = 0.0;
  bool clamped = false;
  int iterations = 0;

  bool operator==(const PredictabilityReport&) const = default;
};

// Each validator returns its argument unchanged or throws rsspredict::Error.

void validate_band(const BandMetadata& band);

/// Throws EmptyTrace, or NonFiniteSample with the offending index in line().
PsdTrace validate_trace(PsdTrace trace);

QuantizedTrace validate_quantized(QuantizedTrace trace);

LevelDistribution validate_distribution(LevelDistribution dist);

}  // namespace rsspredict
