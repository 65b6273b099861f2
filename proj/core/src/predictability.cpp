#include "rsspredict/predictability.hpp"

#include <algorithm>
#include <cmath>

#include "rsspredict/entropy.hpp"
#include "rsspredict/error.hpp"

namespace rsspredict {

namespace {

double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

}  // namespace

double fano_rhs(double pi, std::int32_t q) {
  if (q < 2) throw Error(Errc::DomainError, "fano_rhs requires q >= 2");
  const double floor = 1.0 / static_cast<double>(q);
  if (!(pi >= floor && pi <= 1.0)) {
    throw Error(Errc::DomainError, "pi=" + std::to_string(pi) + " outside [1/q, 1]");
  }
  return binary_entropy(pi) + (1.0 - pi) * std::log2(static_cast<double>(q - 1));
}

PredictabilityReport max_predictability(double e_actual, std::int32_t q) {
  if (q < 1) throw Error(Errc::InvalidConfig, "q must be at least 1");
  if (!std::isfinite(e_actual)) throw Error(Errc::DomainError, "entropy is not finite");

  PredictabilityReport report;
  if (q == 1) {
    report.pi_max = 1.0;
    report.entropy_used = 0.0;
    return report;
  }
  const double e_max = std::log2(static_cast<double>(q));
  if (e_actual <= 0.0) {
    report.pi_max = 1.0;
    report.entropy_used = 0.0;
    report.clamped = e_actual < 0.0;
    return report;
  }
  if (e_actual >= e_max) {
    report.pi_max = 1.0 / static_cast<double>(q);
    report.entropy_used = e_max;
    report.clamped = e_actual > e_max;
    return report;
  }

  // fano_rhs(lo) > e_actual > fano_rhs(hi) holds throughout.
  double lo = 1.0 / static_cast<double>(q);
  double hi = 1.0;
  int iterations = 0;
  while (hi - lo > kFanoTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (fano_rhs(mid, q) > e_actual) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }
  report.pi_max = 0.5 * (lo + hi);
  report.entropy_used = e_actual;
  report.iterations = iterations;
  return report;
}

PredictabilityReport band_predictability(const QuantizedTrace& qt) {
  return max_predictability(lz_entropy_estimate(qt.levels), qt.q);
}

CdfReport predictability_cdf(std::span<const PredictabilityReport> reports, std::string service,
                             std::int32_t q) {
  if (reports.empty()) throw Error(Errc::EmptyInput, "no predictability reports");
  std::vector<double> values;
  values.reserve(reports.size());
  for (const auto& r : reports) values.push_back(r.pi_max);
  std::sort(values.begin(), values.end());

  CdfReport cdf;
  cdf.service = std::move(service);
  cdf.q = q;
  const auto total = static_cast<double>(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    cdf.points.emplace_back(values[k], static_cast<double>(k + 1) / total);
  }
  return cdf;
}

}  // namespace rsspredict
