#include "rsspredict/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "rsspredict/error.hpp"

namespace rsspredict {

void validate_config(const QuantizationConfig& cfg) {
  if (cfg.q < 1) throw Error(Errc::InvalidConfig, "q must be at least 1");
  if (cfg.range) {
    if (!std::isfinite(cfg.range->lo) || !std::isfinite(cfg.range->hi) ||
        !(cfg.range->lo < cfg.range->hi)) {
      throw Error(Errc::InvalidConfig, "explicit range requires finite lo < hi");
    }
  }
}

std::string_view to_string(QuantizationStrategy s) noexcept {
  return s == QuantizationStrategy::EqualWidth ? "equal-width" : "equal-frequency";
}

std::optional<QuantizationStrategy> parse_strategy(std::string_view name) noexcept {
  if (name == "equal-width") return QuantizationStrategy::EqualWidth;
  if (name == "equal-frequency") return QuantizationStrategy::EqualFrequency;
  return std::nullopt;
}

namespace {

std::vector<double> equal_width_edges(double lo, double hi, std::int32_t q) {
  std::vector<double> edges;
  edges.reserve(static_cast<std::size_t>(q - 1));
  const double span = hi - lo;
  for (std::int32_t k = 1; k < q; ++k) {
    edges.push_back(lo + span * static_cast<double>(k) / static_cast<double>(q));
  }
  return edges;
}

std::vector<double> equal_frequency_edges(const std::vector<double>& samples, std::int32_t q) {
  std::vector<double> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  std::vector<double> edges;
  for (std::int32_t k = 1; k < q; ++k) {
    const double e = sorted[static_cast<std::size_t>(k) * n / static_cast<std::size_t>(q)];
    // The minimum cannot serve as an edge: it would leave level 0 empty.
    if (e == sorted.front()) continue;
    if (edges.empty() || edges.back() < e) edges.push_back(e);
  }
  return edges;
}

}  // namespace

QuantizedTrace quantize(const PsdTrace& trace, const QuantizationConfig& cfg) {
  validate_config(cfg);
  QuantizedTrace out;
  out.band = trace.band;
  out.q = cfg.q;
  out.levels.assign(trace.samples.size(), 0);
  if (trace.samples.empty() || cfg.q == 1) return out;

  const auto [min_it, max_it] = std::minmax_element(trace.samples.begin(), trace.samples.end());
  if (*min_it == *max_it) return out;

  if (cfg.strategy == QuantizationStrategy::EqualWidth) {
    const double lo = cfg.range ? cfg.range->lo : *min_it;
    const double hi = cfg.range ? cfg.range->hi : *max_it;
    out.bin_edges = equal_width_edges(lo, hi, cfg.q);
  } else {
    out.bin_edges = equal_frequency_edges(trace.samples, cfg.q);
  }

  for (std::size_t i = 0; i < trace.samples.size(); ++i) {
    const auto above =
        std::upper_bound(out.bin_edges.begin(), out.bin_edges.end(), trace.samples[i]);
    out.levels[i] = static_cast<std::int32_t>(above - out.bin_edges.begin());
  }
  return out;
}

LevelDistribution level_distribution(const QuantizedTrace& qt) {
  if (qt.levels.empty()) throw Error(Errc::EmptyTrace, "no levels");
  if (qt.q < 1) throw Error(Errc::InvalidConfig, "q must be at least 1");
  std::vector<std::size_t> counts(static_cast<std::size_t>(qt.q), 0);
  for (auto level : qt.levels) {
    if (level < 0 || level >= qt.q) throw Error(Errc::DomainError, "level outside alphabet");
    ++counts[static_cast<std::size_t>(level)];
  }
  LevelDistribution dist;
  dist.probabilities.reserve(counts.size());
  const auto n = static_cast<double>(qt.levels.size());
  for (auto c : counts) dist.probabilities.push_back(static_cast<double>(c) / n);
  return dist;
}

}  // namespace rsspredict
