#include "rsspredict/serialize.hpp"

#include <string>

#include "rsspredict/error.hpp"

namespace rsspredict {

void to_json(nlohmann::json& j, const BandMetadata& v) {
  j = {{"center_freq_hz", v.center_freq_hz}, {"bandwidth_hz", v.bandwidth_hz}, {"label", v.label}};
  j["service"] = v.service ? nlohmann::json(*v.service) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, BandMetadata& v) {
  j.at("center_freq_hz").get_to(v.center_freq_hz);
  j.at("bandwidth_hz").get_to(v.bandwidth_hz);
  j.at("label").get_to(v.label);
  if (j.contains("service") && !j.at("service").is_null()) {
    v.service = j.at("service").get<std::string>();
  } else {
    v.service.reset();
  }
}

void to_json(nlohmann::json& j, const PsdTrace& v) {
  j = {{"band", v.band}, {"samples", v.samples}, {"sample_interval_s", v.sample_interval_s}};
}

void from_json(const nlohmann::json& j, PsdTrace& v) {
  j.at("band").get_to(v.band);
  j.at("samples").get_to(v.samples);
  j.at("sample_interval_s").get_to(v.sample_interval_s);
}

void to_json(nlohmann::json& j, const QuantizedTrace& v) {
  j = {{"band", v.band}, {"levels", v.levels}, {"q", v.q}, {"bin_edges", v.bin_edges}};
}

void from_json(const nlohmann::json& j, QuantizedTrace& v) {
  j.at("band").get_to(v.band);
  j.at("levels").get_to(v.levels);
  j.at("q").get_to(v.q);
  j.at("bin_edges").get_to(v.bin_edges);
}

void to_json(nlohmann::json& j, const LevelDistribution& v) {
  j = {{"probabilities", v.probabilities}};
}

void from_json(const nlohmann::json& j, LevelDistribution& v) {
  j.at("probabilities").get_to(v.probabilities);
}

void to_json(nlohmann::json& j, const EntropyReport& v) {
  j = {{"e_rand", v.e_rand}, {"e_unc", v.e_unc}, {"e_actual", v.e_actual},
       {"n", v.n},           {"q", v.q},         {"units", "bits"}};
}

void from_json(const nlohmann::json& j, EntropyReport& v) {
  j.at("e_rand").get_to(v.e_rand);
  j.at("e_unc").get_to(v.e_unc);
  j.at("e_actual").get_to(v.e_actual);
  j.at("n").get_to(v.n);
  j.at("q").get_to(v.q);
}

void to_json(nlohmann::json& j, const PredictabilityReport& v) {
  j = {{"pi_max", v.pi_max},
       {"entropy_used", v.entropy_used},
       {"clamped", v.clamped},
       {"iterations", v.iterations}};
}

void from_json(const nlohmann::json& j, PredictabilityReport& v) {
  j.at("pi_max").get_to(v.pi_max);
  j.at("entropy_used").get_to(v.entropy_used);
  j.at("clamped").get_to(v.clamped);
  j.at("iterations").get_to(v.iterations);
}

void to_json(nlohmann::json& j, const QuantizationConfig& v) {
  j = {{"q", v.q}, {"strategy", std::string(to_string(v.strategy))}};
  if (v.range) {
    j["range"] = {v.range->lo, v.range->hi};
  } else {
    j["range"] = "per-band-min-max";
  }
}

void from_json(const nlohmann::json& j, QuantizationConfig& v) {
  j.at("q").get_to(v.q);
  const auto strategy = parse_strategy(j.at("strategy").get<std::string>());
  if (!strategy) throw Error(Errc::InvalidConfig, "unknown quantization strategy");
  v.strategy = *strategy;
  const auto& range = j.at("range");
  if (range.is_array()) {
    v.range = ExplicitRange{range.at(0).get<double>(), range.at(1).get<double>()};
  } else {
    v.range.reset();
  }
}

void to_json(nlohmann::json& j, const MarkovSpec& v) {
  j = {{"transition", v.transition}, {"initial", v.initial}, {"seed", v.seed}};
}

void from_json(const nlohmann::json& j, MarkovSpec& v) {
  j.at("transition").get_to(v.transition);
  j.at("initial").get_to(v.initial);
  j.at("seed").get_to(v.seed);
}

}  // namespace rsspredict
