#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rsspredict/trace.hpp"

namespace rsspredict {

/// Absolute bracket width at which the Fano inversion stops.
inline constexpr double kFanoTolerance = 1e-10;

struct CdfReport {
  /// (pi_max, cumulative fraction), sorted by pi_max.
  std::vector<std::pair<double, double>> points;
  std::string service;
  std::int32_t q = 0;
};

/// Fano bound H_b(pi) + (1 - pi) log2(q - 1) in bits. Strictly decreasing on
/// [1/q, 1]. Throws DomainError outside that interval or for q < 2.
double fano_rhs(double pi, std::int32_t q);

/// Largest success probability any predictor can reach on a source of entropy
/// rate `e_actual` bits over q levels. Entropies outside [0, log2 q] are
/// clamped and flagged; inside, the Fano equation is solved by bisection.
PredictabilityReport max_predictability(double e_actual, std::int32_t q);

/// max_predictability of the band's LZ entropy estimate.
PredictabilityReport band_predictability(const QuantizedTrace& qt);

/// Empirical CDF of pi_max over a set of bands. Throws EmptyInput.
CdfReport predictability_cdf(std::span<const PredictabilityReport> reports,
                             std::string service, std::int32_t q = 0);

}  // namespace rsspredict
