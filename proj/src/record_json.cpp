#include "docpair/record_json.hpp"

#include "docpair/errors.hpp"

namespace docpair {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& require(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw ValidationError(std::string("record is missing field '") + key + "'");
    return *it;
}

template <typename T>
T field(const json& j, const char* key) {
    try {
        return require(j, key).get<T>();
    } catch (const json::type_error&) {
        throw ValidationError(std::string("record field '") + key + "' has the wrong type");
    }
}

std::optional<Heuristic> parse_heuristic(std::string_view name) {
    for (Heuristic h : {Heuristic::gpt_phrase, Heuristic::suspicious_structure, Heuristic::perfect_structure,
                        Heuristic::generic_language})
        if (heuristic_name(h) == name) return h;
    return std::nullopt;
}

}  // namespace

ordered_json dimensions_to_json(const QualityDimensions& d) {
    ordered_json j = ordered_json::object();
    const auto v = d.values();
    for (std::size_t i = 0; i < quality_dimension_count; ++i) j[std::string(quality_dimension_names[i])] = v[i];
    return j;
}

ordered_json hits_to_json(const std::vector<HeuristicHit>& hits) {
    ordered_json arr = ordered_json::array();
    for (const auto& h : hits)
        arr.push_back({{"heuristic", heuristic_name(h.heuristic)}, {"alpha", h.alpha}, {"evidence", h.evidence}});
    return arr;
}

namespace {

void record_fields(ordered_json& j, const FunctionRecord& r) {
    j["id"] = r.id;
    j["repo"] = r.repo_name;
    j["path"] = r.path;
    j["language"] = language_name(r.language);
    j["name"] = r.name;
    j["signature"] = r.signature;
    j["code"] = r.code;
    j["documentation"] = r.documentation;
    j["start_line"] = r.start_line;
    j["end_line"] = r.end_line;
    j["complexity"] = r.complexity;
    j["logical_lines"] = r.logical_lines;
    j["has_type_annotations"] = r.has_type_annotations;
}

}  // namespace

ordered_json to_json(const StreamRecord& s) {
    ordered_json j;
    record_fields(j, s.record);
    j["parameters"] = s.record.parameters;
    j["returns_value"] = s.record.returns_value;
    if (s.quality) {
        j["quality_score"] = s.quality->score;
        j["quality_dimensions"] = dimensions_to_json(s.quality->dimensions);
        j["quality_passed"] = s.quality->passed;
    }
    if (s.ai) {
        j["ai_score"] = s.ai->score;
        j["ai_flagged"] = s.ai->flagged;
        j["ai_evidence"] = hits_to_json(s.ai->hits);
    }
    return j;
}

StreamRecord stream_record_from_json(const json& j, const QualityWeights& weights) {
    if (!j.is_object()) throw ValidationError("record must be a JSON object");
    StreamRecord s;
    FunctionRecord& r = s.record;
    r.id = field<std::string>(j, "id");
    r.repo_name = field<std::string>(j, "repo");
    r.path = field<std::string>(j, "path");
    const auto lang = parse_language(field<std::string>(j, "language"));
    if (!lang) throw ValidationError("record '" + r.id + "' has an unknown language");
    r.language = *lang;
    r.name = field<std::string>(j, "name");
    r.signature = field<std::string>(j, "signature");
    r.code = field<std::string>(j, "code");
    r.documentation = field<std::string>(j, "documentation");
    r.start_line = field<int>(j, "start_line");
    r.end_line = field<int>(j, "end_line");
    r.complexity = field<int>(j, "complexity");
    r.logical_lines = field<int>(j, "logical_lines");
    r.has_type_annotations = field<bool>(j, "has_type_annotations");
    r.parameters = field<std::vector<std::string>>(j, "parameters");
    r.returns_value = field<bool>(j, "returns_value");
    if (r.start_line < 1 || r.end_line < r.start_line || r.complexity < 1 || r.logical_lines < 0)
        throw ValidationError("record '" + r.id + "' violates line or complexity invariants");

    if (j.contains("quality_score")) {
        QualityAssessment q;
        q.score = field<double>(j, "quality_score");
        q.passed = field<bool>(j, "quality_passed");
        q.weights = weights;
        const json& dims = require(j, "quality_dimensions");
        std::array<double, quality_dimension_count> v{};
        for (std::size_t i = 0; i < quality_dimension_count; ++i) {
            const std::string key(quality_dimension_names[i]);
            if (!dims.contains(key) || !dims[key].is_number())
                throw ValidationError("record '" + r.id + "' is missing quality dimension " + key);
            v[i] = dims[key].get<double>();
        }
        q.dimensions = QualityDimensions::from_values(v);
        s.quality = q;
    }
    if (j.contains("ai_score")) {
        AIDetectionResult a;
        a.score = field<double>(j, "ai_score");
        a.flagged = field<bool>(j, "ai_flagged");
        for (const json& h : require(j, "ai_evidence")) {
            const auto kind = parse_heuristic(field<std::string>(h, "heuristic"));
            if (!kind) throw ValidationError("record '" + r.id + "' has an unknown heuristic");
            a.hits.push_back({*kind, field<double>(h, "alpha"), field<std::string>(h, "evidence")});
        }
        s.ai = std::move(a);
    }
    return s;
}

ordered_json sample_to_json(const DatasetSample& s) {
    ordered_json j;
    record_fields(j, s.record);
    j["quality_score"] = s.quality.score;
    j["quality_dimensions"] = dimensions_to_json(s.quality.dimensions);
    j["ai_score"] = s.ai.score;
    j["ai_flagged"] = s.ai.flagged;
    j["ai_evidence"] = hits_to_json(s.ai.hits);
    j["split"] = split_name(s.split);
    return j;
}

}  // namespace docpair
