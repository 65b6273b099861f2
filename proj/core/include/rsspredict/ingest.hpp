#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rsspredict/trace.hpp"

namespace rsspredict {

/// Time x frequency PSD grid: rows are time slots, columns are bands.
struct SpectrumMatrix {
  std::vector<BandMetadata> bands;
  std::vector<std::vector<double>> rows;
  double sample_interval_s = kDefaultSampleIntervalS;

  std::size_t num_slots() const { return rows.size(); }
  std::size_t num_bands() const { return bands.size(); }

  bool operator==(const SpectrumMatrix&) const = default;
};

struct DutyCycleReport {
  std::vector<std::pair<BandMetadata, double>> per_band;
  double threshold_dbm = 0.0;
};

enum class AveragingDomain { Linear, Decibel };

/// Detection thresholds for 200 kHz channels (dBm).
inline constexpr double kThreshold80222Dbm = -107.0;
inline constexpr double kThresholdFccDbm = -114.0;

// CSV trace format: the first non-comment line lists band centre frequencies
// in MHz, each following line is one time slot of dBm values. Lines starting
// with '#' and blank lines are skipped; CRLF is accepted.
SpectrumMatrix parse_matrix(std::istream& in);
SpectrumMatrix load_matrix(const std::filesystem::path& path);

/// Writes `matrix` in the CSV trace format using the shortest decimal form
/// of each value that parses back to the same double.
void write_matrix(std::ostream& out, const SpectrumMatrix& matrix);

/// Averages consecutive blocks of `block` rows; the trailing partial block is
/// dropped. Linear averaging converts dBm to mW, takes the mean and converts
/// back.
SpectrumMatrix block_average(const SpectrumMatrix& matrix, std::size_t block,
                             AveragingDomain domain = AveragingDomain::Linear);

/// Fraction of slots with PSD strictly above `threshold_dbm`, per band.
DutyCycleReport duty_cycle(const SpectrumMatrix& matrix, double threshold_dbm);

/// Column `band` of the matrix as a validated trace.
PsdTrace band_trace(const SpectrumMatrix& matrix, std::size_t band);

/// Service name -> inclusive [lo, hi] frequency range in MHz.
using ServiceMap = std::map<std::string, std::pair<double, double>>;

/// Reads `{"TV": [614, 698], "ISM": [2400.1, 2483.3]}`.
ServiceMap parse_service_map(std::string_view json_text);
ServiceMap load_service_map(const std::filesystem::path& path);

/// First service (in name order) whose range contains `freq_mhz`.
std::optional<std::string> lookup_service(const ServiceMap& services, double freq_mhz);

void assign_services(std::vector<BandMetadata>& bands, const ServiceMap& services);

}  // namespace rsspredict
