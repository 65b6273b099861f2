#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "rsspredict/rsspredict.hpp"

namespace rsspredict::cli {

namespace fs = std::filesystem;

namespace {

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::EmptyTrace:
    case Errc::NonFiniteSample:
    case Errc::ParseError:
    case Errc::RaggedRow:
    case Errc::NonFiniteValue:
    case Errc::IoError:
    case Errc::EmptyInput:
    case Errc::EmptySequence:
      return kExitInput;
    default:
      return kExitUsage;
  }
}

// Writes through a sibling temporary and renames it into place.
void write_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::IoError, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw Error(Errc::IoError, "write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(Errc::IoError, "cannot rename into " + path.string() + ": " + ec.message());
  }
}

void emit(const OutputOptions& output, const std::string& csv, const nlohmann::json& report) {
  std::optional<fs::path> json_path;
  if (output.json) {
    json_path = *output.json;
  } else if (output.csv) {
    json_path = fs::path(*output.csv).replace_extension(".json");
  }
  // Serialize everything before touching the filesystem.
  const std::string json_text = report.dump(2) + "\n";
  if (output.csv) {
    write_atomic(*output.csv, csv);
  } else {
    std::cout << csv << std::flush;
  }
  if (json_path) write_atomic(*json_path, json_text);
}

template <typename Fn>
int guarded(Fn&& body) {
  try {
    body();
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "rsspredict: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "rsspredict: " << e.what() << '\n';
    return kExitInput;
  }
}

AveragingDomain parse_averaging(const std::string& name) {
  if (name == "linear") return AveragingDomain::Linear;
  if (name == "db") return AveragingDomain::Decibel;
  throw Error(Errc::InvalidConfig, "unknown averaging domain '" + name + "'");
}

RunManifest base_manifest(std::string command) {
  RunManifest m;
  m.command = std::move(command);
  m.tool_version = std::string(tool_version());
  m.timestamp = utc_timestamp();
  return m;
}

}  // namespace

int run_duty_cycle(const DutyCycleOptions& opts) {
  return guarded([&] {
    auto thresholds = opts.thresholds_dbm;
    if (thresholds.empty()) thresholds = {kThreshold80222Dbm, kThresholdFccDbm};
    if (opts.order != "raw" && opts.order != "averaged") {
      throw Error(Errc::InvalidConfig, "order must be raw or averaged");
    }
    const auto order = opts.order == "raw" ? DutyCycleOrder::Raw : DutyCycleOrder::Averaged;
    const auto averaging = parse_averaging(opts.averaging);

    const auto matrix = load_matrix(opts.input);
    const auto reports = duty_cycle_table(matrix, thresholds, opts.block, order, averaging);

    auto manifest = base_manifest("duty-cycle");
    manifest.inputs = {opts.input};
    manifest.block = opts.block;
    manifest.averaging = averaging;
    manifest.thresholds_dbm = thresholds;
    manifest.duty_order = order;
    emit(opts.output, duty_cycle_csv(reports), duty_cycle_json(reports, manifest));
  });
}

int run_analyze(AnalyzeOptions opts) {
  return guarded([&] {
    if (opts.manifest) {
      std::ifstream in(*opts.manifest, std::ios::binary);
      if (!in) throw Error(Errc::IoError, "cannot open " + *opts.manifest);
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("manifest: ") + e.what());
      }
      const auto m = manifest_from_json(doc.contains("manifest") ? doc.at("manifest") : doc);
      if (m.command != "analyze" || m.inputs.size() != 1 || !m.quantization) {
        throw Error(Errc::InvalidConfig, "manifest does not describe an analyze run");
      }
      opts.input = m.inputs.front();
      opts.q = m.quantization->q;
      opts.strategy = std::string(to_string(m.quantization->strategy));
      opts.range.reset();
      if (m.quantization->range) opts.range = {m.quantization->range->lo, m.quantization->range->hi};
      opts.block = m.block;
      opts.averaging = m.averaging == AveragingDomain::Linear ? "linear" : "db";
    }
    if (opts.input.empty()) throw Error(Errc::InvalidConfig, "no input file");

    AnalysisConfig cfg;
    cfg.quantization.q = opts.q;
    const auto strategy = parse_strategy(opts.strategy);
    if (!strategy) throw Error(Errc::InvalidConfig, "unknown strategy '" + opts.strategy + "'");
    cfg.quantization.strategy = *strategy;
    if (opts.range) {
      if (opts.range->size() != 2) throw Error(Errc::InvalidConfig, "--range takes LO,HI");
      cfg.quantization.range = ExplicitRange{(*opts.range)[0], (*opts.range)[1]};
    }
    validate_config(cfg.quantization);
    cfg.block = opts.block;
    cfg.averaging = parse_averaging(opts.averaging);
    cfg.jobs = opts.jobs;

    const auto matrix = load_matrix(opts.input);
    const auto results = analyze_matrix(matrix, cfg);

    auto manifest = base_manifest("analyze");
    manifest.inputs = {opts.input};
    manifest.quantization = cfg.quantization;
    manifest.block = cfg.block;
    manifest.averaging = cfg.averaging;
    manifest.jobs = cfg.jobs;
    emit(opts.output, analysis_csv(results), analysis_json(results, manifest));
  });
}

int run_cdf(const CdfOptions& opts) {
  return guarded([&] {
    if (opts.inputs.empty()) throw Error(Errc::InvalidConfig, "no analysis files");
    ServiceMap services;
    if (opts.services) services = load_service_map(*opts.services);

    std::vector<AnalysisRow> rows;
    for (const auto& path : opts.inputs) {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw Error(Errc::IoError, "cannot open " + path);
      auto part = parse_analysis_csv(in);
      rows.insert(rows.end(), part.begin(), part.end());
    }
    if (rows.empty()) throw Error(Errc::EmptyInput, "analysis files contain no bands");
    const auto cdfs = service_cdfs(rows, services);

    auto manifest = base_manifest("cdf");
    manifest.inputs = opts.inputs;
    manifest.service_map = opts.services;
    emit(opts.output, cdf_csv(cdfs), cdf_json(cdfs, manifest));
  });
}

int run_synth(const SynthOptions& opts) {
  return guarded([&] {
    if (opts.bands == 0) throw Error(Errc::InvalidConfig, "--bands must be positive");
    const std::uint64_t seed = opts.seed.value_or(1);
    std::optional<MarkovSpec> markov;
    if (opts.model == "markov") {
      if (!opts.spec) throw Error(Errc::InvalidConfig, "--model markov needs --spec");
      markov = load_markov_spec(*opts.spec);
      if (opts.seed) markov->seed = *opts.seed;
    } else if (opts.model == "periodic") {
      if (opts.pattern.empty()) throw Error(Errc::InvalidConfig, "--model periodic needs --pattern");
    } else if (opts.model != "gaussian" && opts.model != "iid") {
      throw Error(Errc::InvalidConfig, "unknown model '" + opts.model + "'");
    }
    if (opts.n == 0 && opts.model != "periodic") throw Error(Errc::InvalidConfig, "--n must be positive");

    SpectrumMatrix matrix;
    for (std::size_t b = 0; b < opts.bands; ++b) {
      BandMetadata band;
      band.center_freq_hz =
          std::round((opts.start_mhz + opts.spacing_mhz * static_cast<double>(b)) * 1e6);
      band.label = "synthetic-" + std::to_string(b);

      PsdTrace trace;
      if (opts.model == "gaussian") {
        trace = gen_gaussian_psd(opts.n, opts.mean_dbm, opts.sigma_db, seed + b, band);
      } else if (opts.model == "iid") {
        trace = levels_to_psd(gen_iid_uniform(opts.q, opts.n, seed + b, band), opts.floor_dbm,
                              opts.step_db);
      } else if (opts.model == "markov") {
        auto spec = *markov;
        spec.seed += b;
        trace = levels_to_psd(gen_markov(spec, opts.n, band), opts.floor_dbm, opts.step_db);
      } else {
        trace = levels_to_psd(gen_periodic(opts.pattern, opts.repeats, 0, band), opts.floor_dbm,
                              opts.step_db);
      }
      if (matrix.rows.empty()) matrix.rows.assign(trace.samples.size(), {});
      for (std::size_t t = 0; t < trace.samples.size(); ++t) {
        matrix.rows[t].push_back(trace.samples[t]);
      }
      matrix.bands.push_back(band);
    }

    std::ostringstream csv;
    write_matrix(csv, matrix);

    auto manifest = base_manifest("synth");
    manifest.seeds = {markov ? markov->seed : seed};
    manifest.model = {{"model", opts.model},
                      {"n", opts.n},
                      {"bands", opts.bands},
                      {"q", opts.q},
                      {"mean_dbm", opts.mean_dbm},
                      {"sigma_db", opts.sigma_db},
                      {"pattern", opts.pattern},
                      {"repeats", opts.repeats},
                      {"floor_dbm", opts.floor_dbm},
                      {"step_db", opts.step_db},
                      {"start_mhz", opts.start_mhz},
                      {"spacing_mhz", opts.spacing_mhz}};
    if (markov) manifest.model["markov"] = *markov;
    const nlohmann::json report = {{"schema_version", kReportSchemaVersion},
                                   {"kind", "synth"},
                                   {"manifest", manifest_to_json(manifest)},
                                   {"rows", matrix.num_slots()},
                                   {"bands", matrix.num_bands()}};
    emit(opts.output, csv.str(), report);
  });
}

}  // namespace rsspredict::cli
