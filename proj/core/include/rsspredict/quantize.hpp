#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "rsspredict/trace.hpp"

namespace rsspredict {

enum class QuantizationStrategy { EqualWidth, EqualFrequency };

struct ExplicitRange {
  double lo = 0.0;
  double hi = 0.0;

  bool operator==(const ExplicitRange&) const = default;
};

struct QuantizationConfig {
  std::int32_t q = 8;
  QuantizationStrategy strategy = QuantizationStrategy::EqualWidth;
  /// Empty means the band's own observed [min, max]. Only EqualWidth uses it.
  std::optional<ExplicitRange> range;

  bool operator==(const QuantizationConfig&) const = default;
};

void validate_config(const QuantizationConfig& cfg);

std::string_view to_string(QuantizationStrategy s) noexcept;
std::optional<QuantizationStrategy> parse_strategy(std::string_view name) noexcept;

/// Maps each sample to the number of interior bin edges at or below it, so a
/// value on an edge lands in the upper bin and the range maximum lands in
/// level q-1. Values outside an explicit range clamp to the end bins.
///
/// EqualWidth splits [lo, hi] into q equal intervals. EqualFrequency places
/// edge k at the sorted sample of rank floor(k*n/q); repeated quantiles are
/// merged, so heavily tied data can yield fewer than q-1 edges. A band with
/// max == min maps entirely to level 0 with no edges.
QuantizedTrace quantize(const PsdTrace& trace, const QuantizationConfig& cfg);

/// Empirical frequency of each level. Throws EmptyTrace on an empty trace.
LevelDistribution level_distribution(const QuantizedTrace& qt);

}  // namespace rsspredict
