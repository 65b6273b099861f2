#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "commands.hpp"
#include "rsspredict/report.hpp"

namespace {

void add_output_flags(CLI::App* cmd, rsspredict::cli::OutputOptions& out) {
  cmd->add_option("--output,-o", out.csv, "CSV report path (stdout when omitted)");
  cmd->add_option("--json", out.json, "JSON report path (default: --output with .json)");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace rsspredict::cli;

  CLI::App app{"Entropy and predictability limits of radio spectrum state traces"};
  app.set_version_flag("--version", std::string(rsspredict::tool_version()));
  app.require_subcommand(1);

  const unsigned cores = std::max(1u, std::thread::hardware_concurrency());

  DutyCycleOptions duty;
  auto* duty_cmd = app.add_subcommand("duty-cycle", "Per-band duty cycle under detection thresholds");
  duty_cmd->add_option("input", duty.input, "CSV trace file")->required();
  duty_cmd->add_option("--threshold", duty.thresholds_dbm,
                       "Detection threshold in dBm, repeatable (default -107 and -114)")
      ->allow_extra_args(false);
  duty_cmd->add_option("--block", duty.block, "Average this many consecutive slots")
      ->check(CLI::PositiveNumber);
  duty_cmd->add_option("--order", duty.order, "Take duty cycle on raw or averaged slots")
      ->check(CLI::IsMember({"raw", "averaged"}));
  duty_cmd->add_option("--averaging", duty.averaging, "Averaging domain")
      ->check(CLI::IsMember({"linear", "db"}));
  add_output_flags(duty_cmd, duty.output);

  AnalyzeOptions analyze;
  analyze.jobs = cores;
  auto* analyze_cmd = app.add_subcommand("analyze", "Entropy and maximum predictability per band");
  analyze_cmd->add_option("input", analyze.input, "CSV trace file");
  analyze_cmd->add_option("--q", analyze.q, "Number of RSS levels")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--strategy", analyze.strategy, "Quantizer")
      ->check(CLI::IsMember({"equal-width", "equal-frequency"}));
  analyze_cmd->add_option("--range", analyze.range, "Explicit quantizer range LO,HI in dBm")
      ->delimiter(',')
      ->expected(2);
  analyze_cmd->add_option("--block", analyze.block, "Average this many consecutive slots first")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--averaging", analyze.averaging, "Averaging domain")
      ->check(CLI::IsMember({"linear", "db"}));
  analyze_cmd->add_option("--jobs,-j", analyze.jobs, "Worker threads")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--manifest", analyze.manifest,
                          "Rerun the analysis recorded in a JSON report");
  add_output_flags(analyze_cmd, analyze.output);

  CdfOptions cdf;
  auto* cdf_cmd = app.add_subcommand("cdf", "Per-service CDF of maximum predictability");
  cdf_cmd->add_option("inputs", cdf.inputs, "Analysis CSV files")->required();
  cdf_cmd->add_option("--services", cdf.services,
                      "JSON map {service: [lo_mhz, hi_mhz]}; unmatched bands are 'unassigned'");
  add_output_flags(cdf_cmd, cdf.output);

  SynthOptions synth;
  auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic trace CSV");
  synth_cmd->add_option("--model", synth.model, "gaussian | iid | markov | periodic")->required();
  synth_cmd->add_option("--n", synth.n, "Samples per band");
  synth_cmd->add_option("--seed", synth.seed, "Seed of band 0; band b uses seed + b");
  synth_cmd->add_option("--bands", synth.bands, "Number of bands");
  synth_cmd->add_option("--q", synth.q, "Alphabet size for --model iid")->check(CLI::PositiveNumber);
  synth_cmd->add_option("--mean", synth.mean_dbm, "Gaussian mean, dBm");
  synth_cmd->add_option("--sigma", synth.sigma_db, "Gaussian standard deviation, dB");
  synth_cmd->add_option("--spec", synth.spec, "Markov chain JSON");
  synth_cmd->add_option("--pattern", synth.pattern, "Periodic level pattern, e.g. 0,1,2")
      ->delimiter(',');
  synth_cmd->add_option("--repeats", synth.repeats, "Pattern repetitions")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--floor-dbm", synth.floor_dbm, "PSD of level 0");
  synth_cmd->add_option("--step-db", synth.step_db, "PSD step between levels");
  synth_cmd->add_option("--start-mhz", synth.start_mhz, "Centre frequency of band 0");
  synth_cmd->add_option("--spacing-mhz", synth.spacing_mhz, "Band spacing");
  add_output_flags(synth_cmd, synth.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*duty_cmd) return run_duty_cycle(duty);
  if (*analyze_cmd) {
    if (analyze.input.empty() && !analyze.manifest) {
      std::cerr << "rsspredict: analyze needs an input file or --manifest\n";
      return kExitUsage;
    }
    return run_analyze(analyze);
  }
  if (*cdf_cmd) return run_cdf(cdf);
  return run_synth(synth);
}
