#include "rsspredict/trace.hpp"

#include <cmath>
#include <string>

#include "rsspredict/error.hpp"

namespace rsspredict {

void validate_band(const BandMetadata& band) {
  if (!(band.center_freq_hz > 0.0) || !std::isfinite(band.center_freq_hz)) {
    throw Error(Errc::InvalidConfig, "center frequency must be positive");
  }
  if (!(band.bandwidth_hz > 0.0) || !std::isfinite(band.bandwidth_hz)) {
    throw Error(Errc::InvalidConfig, "bandwidth must be positive");
  }
}

PsdTrace validate_trace(PsdTrace trace) {
  if (trace.samples.empty()) {
    throw Error(Errc::EmptyTrace, "trace '" + trace.band.label + "' has no samples");
  }
  for (std::size_t i = 0; i < trace.samples.size(); ++i) {
    if (!std::isfinite(trace.samples[i])) {
      throw Error(Errc::NonFiniteSample, "sample " + std::to_string(i) + " is not finite", i);
    }
  }
  if (!(trace.sample_interval_s > 0.0)) {
    throw Error(Errc::InvalidConfig, "sample interval must be positive");
  }
  return trace;
}

QuantizedTrace validate_quantized(QuantizedTrace trace) {
  if (trace.q < 1) throw Error(Errc::InvalidConfig, "alphabet size must be at least 1");
  for (std::size_t i = 0; i < trace.levels.size(); ++i) {
    if (trace.levels[i] < 0 || trace.levels[i] >= trace.q) {
      throw Error(Errc::DomainError, "level " + std::to_string(trace.levels[i]) + " at index " +
                                         std::to_string(i) + " outside alphabet");
    }
  }
  for (std::size_t i = 1; i < trace.bin_edges.size(); ++i) {
    if (!(trace.bin_edges[i - 1] < trace.bin_edges[i])) {
      throw Error(Errc::InvalidConfig, "bin edges not strictly increasing");
    }
  }
  return trace;
}

LevelDistribution validate_distribution(LevelDistribution dist) {
  if (dist.probabilities.empty()) throw Error(Errc::EmptyInput, "empty distribution");
  double sum = 0.0;
  for (double p : dist.probabilities) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::DomainError, "probability outside [0,1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw Error(Errc::DomainError, "probabilities do not sum to 1");
  }
  return dist;
}

}  // namespace rsspredict
