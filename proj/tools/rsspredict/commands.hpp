#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rsspredict::cli {

// Exit codes are part of the scripting contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitUsage = 3;

struct OutputOptions {
  std::optional<std::string> csv;   // stdout when empty
  std::optional<std::string> json;  // defaults to the CSV path with .json
};

struct DutyCycleOptions {
  std::string input;
  std::vector<double> thresholds_dbm;
  std::size_t block = 1;
  std::string order = "averaged";
  std::string averaging = "linear";
  OutputOptions output;
};

struct AnalyzeOptions {
  std::string input;
  std::int32_t q = 8;
  std::string strategy = "equal-width";
  std::optional<std::vector<double>> range;
  std::size_t block = 1;
  std::string averaging = "linear";
  unsigned jobs = 1;
  std::optional<std::string> manifest;
  OutputOptions output;
};

struct CdfOptions {
  std::vector<std::string> inputs;
  std::optional<std::string> services;
  OutputOptions output;
};

struct SynthOptions {
  std::string model;
  std::size_t n = 3360;
  std::optional<std::uint64_t> seed;
  std::size_t bands = 1;
  std::int32_t q = 8;
  double mean_dbm = -110.0;
  double sigma_db = 3.0;
  std::optional<std::string> spec;
  std::vector<std::int32_t> pattern;
  std::size_t repeats = 1;
  double floor_dbm = -120.0;
  double step_db = 3.0;
  double start_mhz = 614.1;
  double spacing_mhz = 0.2;
  OutputOptions output;
};

// Each command returns a process exit code; errors go to stderr and no
// output file is created or replaced on failure.
int run_duty_cycle(const DutyCycleOptions& opts);
int run_analyze(AnalyzeOptions opts);
int run_cdf(const CdfOptions& opts);
int run_synth(const SynthOptions& opts);

}  // namespace rsspredict::cli
