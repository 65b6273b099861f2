#include "rsspredict/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <istream>
#include <map>
#include <sstream>

#include "rsspredict/error.hpp"
#include "rsspredict/serialize.hpp"
#include "rsspredict/version.hpp"

namespace rsspredict {

std::string_view tool_version() noexcept { return kVersion; }

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

std::string averaging_name(AveragingDomain d) { return d == AveragingDomain::Linear ? "linear" : "db"; }

std::string order_name(DutyCycleOrder o) { return o == DutyCycleOrder::Averaged ? "averaged" : "raw"; }

double freq_mhz(const BandMetadata& band) { return band.center_freq_hz / 1e6; }

}  // namespace

nlohmann::json manifest_to_json(const RunManifest& m) {
  nlohmann::json j = {
      {"command", m.command},
      {"inputs", m.inputs},
      {"block", m.block},
      {"averaging", averaging_name(m.averaging)},
      {"thresholds_dbm", m.thresholds_dbm},
      {"duty_order", order_name(m.duty_order)},
      {"seeds", m.seeds},
      {"model", m.model},
      {"jobs", m.jobs},
      {"tool_version", m.tool_version},
      {"timestamp", m.timestamp},
  };
  j["quantization"] = m.quantization ? nlohmann::json(*m.quantization) : nlohmann::json(nullptr);
  j["service_map"] = m.service_map ? nlohmann::json(*m.service_map) : nlohmann::json(nullptr);
  return j;
}

RunManifest manifest_from_json(const nlohmann::json& j) {
  RunManifest m;
  try {
    j.at("command").get_to(m.command);
    j.at("inputs").get_to(m.inputs);
    if (!j.at("quantization").is_null()) m.quantization = j.at("quantization").get<QuantizationConfig>();
    j.at("block").get_to(m.block);
    m.averaging = j.at("averaging").get<std::string>() == "db" ? AveragingDomain::Decibel
                                                               : AveragingDomain::Linear;
    j.at("thresholds_dbm").get_to(m.thresholds_dbm);
    m.duty_order = j.at("duty_order").get<std::string>() == "raw" ? DutyCycleOrder::Raw
                                                                  : DutyCycleOrder::Averaged;
    j.at("seeds").get_to(m.seeds);
    if (!j.at("service_map").is_null()) m.service_map = j.at("service_map").get<std::string>();
    m.model = j.value("model", nlohmann::json::object());
    m.jobs = j.value("jobs", 1u);
    j.at("tool_version").get_to(m.tool_version);
    j.at("timestamp").get_to(m.timestamp);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("manifest: ") + e.what());
  }
  return m;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string analysis_csv(std::span<const BandAnalysis> results) {
  std::string out = "freq_mhz,e_rand,e_unc,e_actual,pi_max,clamped,n\n";
  for (const auto& r : results) {
    out += format_number(freq_mhz(r.band));
    out += ',' + format_number(r.entropy.e_rand);
    out += ',' + format_number(r.entropy.e_unc);
    out += ',' + format_number(r.entropy.e_actual);
    out += ',' + format_number(r.predictability.pi_max);
    out += r.predictability.clamped ? ",true" : ",false";
    out += ',' + std::to_string(r.entropy.n);
    out += '\n';
  }
  return out;
}

nlohmann::json analysis_json(std::span<const BandAnalysis> results, const RunManifest& manifest) {
  nlohmann::json bands = nlohmann::json::array();
  for (const auto& r : results) {
    bands.push_back({{"freq_mhz", freq_mhz(r.band)},
                     {"band", r.band},
                     {"entropy", r.entropy},
                     {"predictability", r.predictability}});
  }
  return {{"schema_version", kReportSchemaVersion},
          {"kind", "analysis"},
          {"entropy_units", "bits"},
          {"manifest", manifest_to_json(manifest)},
          {"bands", std::move(bands)}};
}

std::string duty_cycle_csv(std::span<const DutyCycleReport> reports) {
  std::string out = "freq_mhz";
  for (const auto& r : reports) out += ",duty_cycle@" + format_number(r.threshold_dbm);
  out += '\n';
  if (reports.empty()) return out;
  const auto bands = reports.front().per_band.size();
  for (std::size_t b = 0; b < bands; ++b) {
    out += format_number(freq_mhz(reports.front().per_band[b].first));
    for (const auto& r : reports) out += ',' + format_number(r.per_band.at(b).second);
    out += '\n';
  }
  return out;
}

nlohmann::json duty_cycle_json(std::span<const DutyCycleReport> reports,
                               const RunManifest& manifest) {
  nlohmann::json thresholds = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json per_band = nlohmann::json::array();
    for (const auto& [band, dc] : r.per_band) {
      per_band.push_back({{"freq_mhz", freq_mhz(band)}, {"duty_cycle", dc}});
    }
    thresholds.push_back({{"threshold_dbm", r.threshold_dbm}, {"bands", std::move(per_band)}});
  }
  return {{"schema_version", kReportSchemaVersion},
          {"kind", "duty_cycle"},
          {"manifest", manifest_to_json(manifest)},
          {"thresholds", std::move(thresholds)}};
}

std::vector<AnalysisRow> parse_analysis_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto split = [](const std::string& s) {
    std::vector<std::string> fields;
    std::stringstream ss(s);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (!s.empty() && s.back() == ',') fields.emplace_back();
    return fields;
  };
  auto strip_cr = [](std::string& s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
  };

  std::optional<std::vector<std::string>> header;
  std::size_t freq_col = 0, pi_col = 0;
  std::optional<std::size_t> erand_col;
  std::vector<AnalysisRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split(line);
    if (!header) {
      header = fields;
      auto find = [&](std::string_view name) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < fields.size(); ++i) {
          if (fields[i] == name) return i;
        }
        return std::nullopt;
      };
      auto f = find("freq_mhz");
      auto p = find("pi_max");
      if (!f || !p) {
        throw Error(Errc::ParseError, "analysis CSV needs freq_mhz and pi_max columns", line_no);
      }
      freq_col = *f;
      pi_col = *p;
      erand_col = find("e_rand");
      continue;
    }
    if (fields.size() != header->size()) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": wrong field count",
                  line_no);
    }
    AnalysisRow row;
    try {
      std::size_t used = 0;
      row.freq_mhz = std::stod(fields[freq_col], &used);
      if (used != fields[freq_col].size()) throw std::invalid_argument("trailing");
      row.pi_max = std::stod(fields[pi_col], &used);
      if (used != fields[pi_col].size()) throw std::invalid_argument("trailing");
      if (erand_col) {
        row.q = static_cast<std::int32_t>(std::lround(std::exp2(std::stod(fields[*erand_col]))));
      }
    } catch (const std::logic_error&) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad number", line_no);
    }
    if (!std::isfinite(row.pi_max) || row.pi_max < 0.0 || row.pi_max > 1.0) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": pi_max outside [0,1]",
                  line_no);
    }
    rows.push_back(row);
  }
  if (!header) throw Error(Errc::ParseError, "analysis CSV is empty");
  return rows;
}

std::vector<CdfReport> service_cdfs(std::span<const AnalysisRow> rows, const ServiceMap& services) {
  std::map<std::string, std::vector<PredictabilityReport>> groups;
  std::map<std::string, std::int32_t> alphabet;
  for (const auto& row : rows) {
    const auto name = lookup_service(services, row.freq_mhz).value_or(std::string(kUnassignedService));
    PredictabilityReport r;
    r.pi_max = row.pi_max;
    groups[name].push_back(r);
    auto [it, inserted] = alphabet.emplace(name, row.q);
    if (!inserted && it->second != row.q) it->second = 0;  // mixed alphabets
  }
  std::vector<CdfReport> cdfs;
  for (const auto& [name, reports] : groups) {
    cdfs.push_back(predictability_cdf(reports, name, alphabet[name]));
  }
  return cdfs;
}

std::string cdf_csv(std::span<const CdfReport> cdfs) {
  std::string out = "service,pi_max,fraction\n";
  for (const auto& cdf : cdfs) {
    for (const auto& [pi, fraction] : cdf.points) {
      out += cdf.service + ',' + format_number(pi) + ',' + format_number(fraction) + '\n';
    }
  }
  return out;
}

nlohmann::json cdf_json(std::span<const CdfReport> cdfs, const RunManifest& manifest) {
  nlohmann::json services = nlohmann::json::array();
  for (const auto& cdf : cdfs) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& [pi, fraction] : cdf.points) points.push_back({pi, fraction});
    services.push_back({{"service", cdf.service},
                        {"q", cdf.q},
                        {"min_pi_max", cdf.points.front().first},
                        {"points", std::move(points)}});
  }
  return {{"schema_version", kReportSchemaVersion},
          {"kind", "cdf"},
          {"manifest", manifest_to_json(manifest)},
          {"services", std::move(services)}};
}

}  // namespace rsspredict
