#pragma once

#include "docpair/quality_types.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace docpair {

// Stage 1 hard thresholds and name/content heuristics. Length and line bounds are inclusive.
struct Stage1Config {
    std::size_t min_doc_chars = 20;
    std::size_t max_doc_chars = 10'000;
    int min_complexity = 1;  // vacuous: cyclomatic complexity is never below 1
    int max_complexity = 50;
    int min_logical_lines = 5;
    std::vector<std::string> accessor_prefixes{"get", "set", "is", "has"};
    int accessor_max_logical_lines = 3;
    std::vector<std::string> test_patterns{"test_", "test", "Test", "TEST", "_test"};
    std::vector<std::string> test_path_segments{"test", "tests", "testing", "__tests__"};
    std::vector<std::string> placeholder_markers{"TODO", "FIXME", "XXX"};
};

struct QualityConfig {
    QualityWeights weights;
    double min_quality_score = 6.0;
};

struct DedupConfig {
    std::size_t num_hashes = 128;
    double tau_lsh = 0.8;
    std::uint64_t seed = 42;
    bool cross_language = false;
};

struct AiConfig {
    double alpha_gpt_phrase = 0.3;
    double alpha_suspicious_structure = 0.2;
    double alpha_perfect_structure = 0.2;
    double alpha_generic_language = 0.1;
    double tau_ai = 0.5;
    // Empty path selects the built-in pack.
    std::filesystem::path gpt_phrase_pack;
    std::filesystem::path generic_phrase_pack;
};

struct SplitConfig {
    double train = 0.8;
    double validation = 0.1;
    double test = 0.1;
    std::uint64_t seed = 42;
};

struct PipelineConfig {
    Stage1Config stage1;
    QualityConfig quality;
    DedupConfig dedup;
    AiConfig ai;
    SplitConfig split;
    std::vector<std::string> ignore_globs{"node_modules", "build", "dist", "target", ".git", "vendor", "third_party"};
    unsigned workers = 1;
};

// Throws ValidationError when an invariant does not hold.
void validate(const PipelineConfig& config);

// Parses a flat YAML mapping. Missing keys keep their defaults; unknown keys and
// wrongly typed values raise ConfigError naming the key. Relative phrase-pack paths
// are resolved against `base_dir`. The result is validated.
PipelineConfig parse_config(std::string_view document, const std::filesystem::path& base_dir = {});

PipelineConfig load_config(const std::filesystem::path& path);

// DOCPAIR_SEED overrides both the dedup and split seeds; DOCPAIR_WORKERS the worker count.
void apply_env_overrides(PipelineConfig& config);

void override_seed(PipelineConfig& config, std::uint64_t seed);

// Every key with its effective value, in documented order.
nlohmann::ordered_json config_snapshot(const PipelineConfig& config);

}  // namespace docpair
