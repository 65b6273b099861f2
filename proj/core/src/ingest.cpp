#include "rsspredict/ingest.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rsspredict/error.hpp"

namespace rsspredict {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::optional<double> parse_double(std::string_view field) {
  double value = 0.0;
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end || field.empty()) return std::nullopt;
  return value;
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

// Shortest representation that parses back to the same double.
std::string format_exact(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

SpectrumMatrix parse_matrix(std::istream& in) {
  SpectrumMatrix matrix;
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_fields(line);

    if (!have_header) {
      for (std::size_t col = 0; col < fields.size(); ++col) {
        auto mhz = parse_double(fields[col]);
        if (!mhz || !std::isfinite(*mhz) || *mhz <= 0.0) {
          throw Error(Errc::ParseError,
                      "line " + std::to_string(line_no) + ": bad frequency '" +
                          std::string(fields[col]) + "'",
                      line_no, col + 1);
        }
        BandMetadata band;
        band.center_freq_hz = *mhz * 1e6;
        band.label = std::string(fields[col]);
        matrix.bands.push_back(std::move(band));
      }
      have_header = true;
      continue;
    }

    if (fields.size() != matrix.bands.size()) {
      throw Error(Errc::RaggedRow,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(matrix.bands.size()) + " fields, got " +
                      std::to_string(fields.size()),
                  line_no);
    }
    std::vector<double> row(fields.size());
    for (std::size_t col = 0; col < fields.size(); ++col) {
      auto v = parse_double(fields[col]);
      if (!v) {
        throw Error(Errc::ParseError,
                    "line " + std::to_string(line_no) + ": bad value '" +
                        std::string(fields[col]) + "'",
                    line_no, col + 1);
      }
      if (!std::isfinite(*v)) {
        throw Error(Errc::NonFiniteValue,
                    "line " + std::to_string(line_no) + " column " + std::to_string(col + 1),
                    line_no, col + 1);
      }
      row[col] = *v;
    }
    matrix.rows.push_back(std::move(row));
  }

  if (in.bad()) throw Error(Errc::IoError, "read failure");
  if (!have_header) throw Error(Errc::EmptyTrace, "no header line");
  if (matrix.rows.empty()) throw Error(Errc::EmptyTrace, "no samples");
  return matrix;
}

SpectrumMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  return parse_matrix(in);
}

void write_matrix(std::ostream& out, const SpectrumMatrix& matrix) {
  for (std::size_t b = 0; b < matrix.bands.size(); ++b) {
    if (b) out << ',';
    out << format_exact(matrix.bands[b].center_freq_hz / 1e6);
  }
  out << '\n';
  for (const auto& row : matrix.rows) {
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (b) out << ',';
      out << format_exact(row[b]);
    }
    out << '\n';
  }
}

SpectrumMatrix block_average(const SpectrumMatrix& matrix, std::size_t block,
                             AveragingDomain domain) {
  if (block == 0) throw Error(Errc::InvalidConfig, "block must be at least 1");
  const std::size_t out_rows = matrix.num_slots() / block;
  if (out_rows == 0) {
    throw Error(Errc::BlockLargerThanTrace, "block of " + std::to_string(block) +
                                                " exceeds " +
                                                std::to_string(matrix.num_slots()) + " slots");
  }

  SpectrumMatrix out;
  out.bands = matrix.bands;
  out.sample_interval_s = matrix.sample_interval_s * static_cast<double>(block);
  if (block == 1) {
    out.rows = matrix.rows;
    return out;
  }

  const std::size_t width = matrix.num_bands();
  out.rows.assign(out_rows, std::vector<double>(width, 0.0));
  for (std::size_t j = 0; j < out_rows; ++j) {
    auto& acc = out.rows[j];
    for (std::size_t r = j * block; r < (j + 1) * block; ++r) {
      for (std::size_t b = 0; b < width; ++b) {
        const double v = matrix.rows[r][b];
        acc[b] += domain == AveragingDomain::Linear ? dbm_to_mw(v) : v;
      }
    }
    for (double& v : acc) {
      v /= static_cast<double>(block);
      if (domain == AveragingDomain::Linear) v = mw_to_dbm(v);
    }
  }
  return out;
}

DutyCycleReport duty_cycle(const SpectrumMatrix& matrix, double threshold_dbm) {
  if (matrix.rows.empty()) throw Error(Errc::EmptyTrace, "empty matrix");
  DutyCycleReport report;
  report.threshold_dbm = threshold_dbm;
  std::vector<std::size_t> busy(matrix.num_bands(), 0);
  for (const auto& row : matrix.rows) {
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (row[b] > threshold_dbm) ++busy[b];
    }
  }
  const auto total = static_cast<double>(matrix.num_slots());
  for (std::size_t b = 0; b < matrix.num_bands(); ++b) {
    report.per_band.emplace_back(matrix.bands[b], static_cast<double>(busy[b]) / total);
  }
  return report;
}

PsdTrace band_trace(const SpectrumMatrix& matrix, std::size_t band) {
  PsdTrace trace;
  trace.band = matrix.bands.at(band);
  trace.sample_interval_s = matrix.sample_interval_s;
  trace.samples.reserve(matrix.num_slots());
  for (const auto& row : matrix.rows) trace.samples.push_back(row.at(band));
  return validate_trace(std::move(trace));
}

ServiceMap parse_service_map(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("service map: ") + e.what());
  }
  if (!doc.is_object()) throw Error(Errc::ParseError, "service map must be a JSON object");

  ServiceMap services;
  for (const auto& [name, range] : doc.items()) {
    if (!range.is_array() || range.size() != 2 || !range[0].is_number() ||
        !range[1].is_number()) {
      throw Error(Errc::ParseError, "service '" + name + "' must map to [lo_mhz, hi_mhz]");
    }
    const double lo = range[0].get<double>();
    const double hi = range[1].get<double>();
    if (!(lo <= hi)) throw Error(Errc::ParseError, "service '" + name + "' has lo > hi");
    services.emplace(name, std::make_pair(lo, hi));
  }
  return services;
}

ServiceMap load_service_map(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_service_map(text.str());
}

std::optional<std::string> lookup_service(const ServiceMap& services, double freq_mhz) {
  for (const auto& [name, range] : services) {
    if (freq_mhz >= range.first && freq_mhz <= range.second) return name;
  }
  return std::nullopt;
}

void assign_services(std::vector<BandMetadata>& bands, const ServiceMap& services) {
  for (auto& band : bands) band.service = lookup_service(services, band.center_freq_hz / 1e6);
}

}  // namespace rsspredict
