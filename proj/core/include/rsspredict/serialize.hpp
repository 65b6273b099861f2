#pragma once

#include <nlohmann/json.hpp>

#include "rsspredict/quantize.hpp"
#include "rsspredict/synth.hpp"
#include "rsspredict/trace.hpp"

// nlohmann::json conversions for the value types. Doubles are written with
// round-trip precision, so from_json(to_json(x)) == x for finite values.
namespace rsspredict {

void to_json(nlohmann::json& j, const BandMetadata& v);
void from_json(const nlohmann::json& j, BandMetadata& v);

void to_json(nlohmann::json& j, const PsdTrace& v);
void from_json(const nlohmann::json& j, PsdTrace& v);

void to_json(nlohmann::json& j, const QuantizedTrace& v);
void from_json(const nlohmann::json& j, QuantizedTrace& v);

void to_json(nlohmann::json& j, const LevelDistribution& v);
void from_json(const nlohmann::json& j, LevelDistribution& v);

void to_json(nlohmann::json& j, const EntropyReport& v);
void from_json(const nlohmann::json& j, EntropyReport& v);

void to_json(nlohmann::json& j, const PredictabilityReport& v);
void from_json(const nlohmann::json& j, PredictabilityReport& v);

void to_json(nlohmann::json& j, const QuantizationConfig& v);
void from_json(const nlohmann::json& j, QuantizationConfig& v);

void to_json(nlohmann::json& j, const MarkovSpec& v);
void from_json(const nlohmann::json& j, MarkovSpec& v);

}  // namespace rsspredict
