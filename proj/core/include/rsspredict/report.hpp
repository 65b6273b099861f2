#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rsspredict/ingest.hpp"
#include "rsspredict/pipeline.hpp"
#include "rsspredict/predictability.hpp"
#include "rsspredict/quantize.hpp"

namespace rsspredict {

/// Bumped whenever a JSON report changes shape.
inline constexpr int kReportSchemaVersion = 1;

std::string_view tool_version() noexcept;

/// Everything needed to rerun a command. Embedded in every JSON report.
struct RunManifest {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<QuantizationConfig> quantization;
  std::size_t block = 1;
  AveragingDomain averaging = AveragingDomain::Linear;
  std::vector<double> thresholds_dbm;
  DutyCycleOrder duty_order = DutyCycleOrder::Averaged;
  std::vector<std::uint64_t> seeds;
  std::optional<std::string> service_map;
  /// Generator flags for `synth` runs.
  nlohmann::json model = nlohmann::json::object();
  unsigned jobs = 1;
  std::string tool_version;
  std::string timestamp;
};

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

nlohmann::json manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const nlohmann::json& j);

/// %.10g; every number in CSV reports goes through here.
std::string format_number(double v);

/// freq_mhz,e_rand,e_unc,e_actual,pi_max,clamped,n
std::string analysis_csv(std::span<const BandAnalysis> results);
nlohmann::json analysis_json(std::span<const BandAnalysis> results, const RunManifest& manifest);

/// freq_mhz followed by one duty_cycle@<threshold> column per report. All
/// reports must cover the same bands.
std::string duty_cycle_csv(std::span<const DutyCycleReport> reports);
nlohmann::json duty_cycle_json(std::span<const DutyCycleReport> reports,
                               const RunManifest& manifest);

struct AnalysisRow {
  double freq_mhz = 0.0;
  double pi_max = 0.0;
  std::int32_t q = 0;
};

/// Reads the freq_mhz and pi_max columns (and q via e_rand when present) of
/// an analysis CSV. Throws ParseError.
std::vector<AnalysisRow> parse_analysis_csv(std::istream& in);

inline constexpr std::string_view kUnassignedService = "unassigned";

/// One CDF per service, in service-name order. Bands outside every range go
/// to "unassigned".
std::vector<CdfReport> service_cdfs(std::span<const AnalysisRow> rows, const ServiceMap& services);

/// service,pi_max,fraction
std::string cdf_csv(std::span<const CdfReport> cdfs);
nlohmann::json cdf_json(std::span<const CdfReport> cdfs, const RunManifest& manifest);

}  // namespace rsspredict
