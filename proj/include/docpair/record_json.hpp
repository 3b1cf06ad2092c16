#pragma once

#include "docpair/ai_detect.hpp"
#include "docpair/assembly.hpp"
#include "docpair/extraction.hpp"
#include "docpair/quality.hpp"

#include <optional>
#include <string>

#include <json.hpp>

// JSON-lines encodings of records flowing between stages and of final samples.
namespace docpair {

// A record as streamed between stages; quality and AI fields appear once computed.
struct StreamRecord {
    FunctionRecord record;
    std::optional<QualityAssessment> quality;
    std::optional<AIDetectionResult> ai;
};

nlohmann::ordered_json to_json(const StreamRecord& r);
// Throws ValidationError on missing or malformed fields. Quality weights are not
// serialized and are taken from `weights`.
StreamRecord stream_record_from_json(const nlohmann::json& j, const QualityWeights& weights = {});

// Final dataset line (documented schema).
nlohmann::ordered_json sample_to_json(const DatasetSample& s);

nlohmann::ordered_json dimensions_to_json(const QualityDimensions& d);
nlohmann::ordered_json hits_to_json(const std::vector<HeuristicHit>& hits);

}  // namespace docpair
