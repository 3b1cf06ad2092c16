#include "docpair/config.hpp"

#include "docpair/errors.hpp"
#include "docpair/ingestion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <string>
#include <utility>

#include <yaml-cpp/yaml.h>

namespace docpair {

namespace {

template <typename T>
T scalar(const YAML::Node& node, const std::string& key) {
    if (!node.IsScalar()) throw ConfigError(key, "expected a scalar value");
    try {
        return node.as<T>();
    } catch (const YAML::Exception&) {
        throw ConfigError(key, "cannot convert '" + node.Scalar() + "'");
    }
}

std::vector<std::string> string_list(const YAML::Node& node, const std::string& key) {
    if (node.IsNull()) return {};
    if (!node.IsSequence()) throw ConfigError(key, "expected a list of strings");
    std::vector<std::string> out;
    for (const auto& item : node) out.push_back(scalar<std::string>(item, key));
    return out;
}

std::size_t non_negative(const YAML::Node& node, const std::string& key) {
    const auto v = scalar<long long>(node, key);
    if (v < 0) throw ConfigError(key, "must be non-negative");
    return static_cast<std::size_t>(v);
}

using Setter = std::function<void(PipelineConfig&, const YAML::Node&, const std::string&,
                                  const std::filesystem::path&)>;

// Documented key order; config_snapshot emits keys in the same order.
const std::vector<std::pair<std::string, Setter>>& setters() {
    static const std::vector<std::pair<std::string, Setter>> table = [] {
        std::vector<std::pair<std::string, Setter>> t;
        auto add = [&t](std::string key, Setter s) { t.emplace_back(std::move(key), std::move(s)); };
        add("min_doc_chars", [](auto& c, auto& n, auto& k, auto&) { c.stage1.min_doc_chars = non_negative(n, k); });
        add("max_doc_chars", [](auto& c, auto& n, auto& k, auto&) { c.stage1.max_doc_chars = non_negative(n, k); });
        add("min_complexity", [](auto& c, auto& n, auto& k, auto&) { c.stage1.min_complexity = scalar<int>(n, k); });
        add("max_complexity", [](auto& c, auto& n, auto& k, auto&) { c.stage1.max_complexity = scalar<int>(n, k); });
        add("min_logical_lines",
            [](auto& c, auto& n, auto& k, auto&) { c.stage1.min_logical_lines = scalar<int>(n, k); });
        add("accessor_prefixes",
            [](auto& c, auto& n, auto& k, auto&) { c.stage1.accessor_prefixes = string_list(n, k); });
        add("accessor_max_logical_lines",
            [](auto& c, auto& n, auto& k, auto&) { c.stage1.accessor_max_logical_lines = scalar<int>(n, k); });
        add("test_patterns", [](auto& c, auto& n, auto& k, auto&) { c.stage1.test_patterns = string_list(n, k); });
        add("test_path_segments",
            [](auto& c, auto& n, auto& k, auto&) { c.stage1.test_path_segments = string_list(n, k); });
        add("placeholder_markers",
            [](auto& c, auto& n, auto& k, auto&) { c.stage1.placeholder_markers = string_list(n, k); });

        add("weight_completeness",
            [](auto& c, auto& n, auto& k, auto&) { c.quality.weights.completeness = scalar<double>(n, k); });
        add("weight_param_coverage",
            [](auto& c, auto& n, auto& k, auto&) { c.quality.weights.param_coverage = scalar<double>(n, k); });
        add("weight_return_coverage",
            [](auto& c, auto& n, auto& k, auto&) { c.quality.weights.return_coverage = scalar<double>(n, k); });
        add("weight_type_annotations",
            [](auto& c, auto& n, auto& k, auto&) { c.quality.weights.type_annotations = scalar<double>(n, k); });
        add("weight_clarity", [](auto& c, auto& n, auto& k, auto&) { c.quality.weights.clarity = scalar<double>(n, k); });
        add("weight_structural_consistency", [](auto& c, auto& n, auto& k, auto&) {
            c.quality.weights.structural_consistency = scalar<double>(n, k);
        });
        add("weight_appropriate_complexity", [](auto& c, auto& n, auto& k, auto&) {
            c.quality.weights.appropriate_complexity = scalar<double>(n, k);
        });
        add("weight_code_quality",
            [](auto& c, auto& n, auto& k, auto&) { c.quality.weights.code_quality = scalar<double>(n, k); });
        add("min_quality_score",
            [](auto& c, auto& n, auto& k, auto&) { c.quality.min_quality_score = scalar<double>(n, k); });

        add("minhash_k", [](auto& c, auto& n, auto& k, auto&) { c.dedup.num_hashes = non_negative(n, k); });
        add("tau_lsh", [](auto& c, auto& n, auto& k, auto&) { c.dedup.tau_lsh = scalar<double>(n, k); });
        add("dedup_seed", [](auto& c, auto& n, auto& k, auto&) { c.dedup.seed = scalar<std::uint64_t>(n, k); });
        add("cross_language_dedup",
            [](auto& c, auto& n, auto& k, auto&) { c.dedup.cross_language = scalar<bool>(n, k); });

        add("alpha_gpt_phrase", [](auto& c, auto& n, auto& k, auto&) { c.ai.alpha_gpt_phrase = scalar<double>(n, k); });
        add("alpha_suspicious_structure",
            [](auto& c, auto& n, auto& k, auto&) { c.ai.alpha_suspicious_structure = scalar<double>(n, k); });
        add("alpha_perfect_structure",
            [](auto& c, auto& n, auto& k, auto&) { c.ai.alpha_perfect_structure = scalar<double>(n, k); });
        add("alpha_generic_language",
            [](auto& c, auto& n, auto& k, auto&) { c.ai.alpha_generic_language = scalar<double>(n, k); });
        add("tau_ai", [](auto& c, auto& n, auto& k, auto&) { c.ai.tau_ai = scalar<double>(n, k); });
        add("gpt_phrase_pack", [](auto& c, auto& n, auto& k, auto& base) {
            const auto p = std::filesystem::path(scalar<std::string>(n, k));
            c.ai.gpt_phrase_pack = p.empty() || p.is_absolute() ? p : base / p;
        });
        add("generic_phrase_pack", [](auto& c, auto& n, auto& k, auto& base) {
            const auto p = std::filesystem::path(scalar<std::string>(n, k));
            c.ai.generic_phrase_pack = p.empty() || p.is_absolute() ? p : base / p;
        });

        add("split_train", [](auto& c, auto& n, auto& k, auto&) { c.split.train = scalar<double>(n, k); });
        add("split_validation", [](auto& c, auto& n, auto& k, auto&) { c.split.validation = scalar<double>(n, k); });
        add("split_test", [](auto& c, auto& n, auto& k, auto&) { c.split.test = scalar<double>(n, k); });
        add("split_seed", [](auto& c, auto& n, auto& k, auto&) { c.split.seed = scalar<std::uint64_t>(n, k); });

        add("ignore_globs", [](auto& c, auto& n, auto& k, auto&) { c.ignore_globs = string_list(n, k); });
        add("workers", [](auto& c, auto& n, auto& k, auto&) { c.workers = scalar<unsigned>(n, k); });
        return t;
    }();
    return table;
}

}  // namespace

void validate(const PipelineConfig& c) {
    auto fail = [](const std::string& what) { throw ValidationError(what); };
    const auto& s1 = c.stage1;
    if (s1.min_doc_chars > s1.max_doc_chars) fail("min_doc_chars exceeds max_doc_chars");
    if (s1.min_complexity > s1.max_complexity) fail("min_complexity exceeds max_complexity");
    if (s1.min_logical_lines < 0) fail("min_logical_lines must be non-negative");
    if (s1.accessor_max_logical_lines < 0) fail("accessor_max_logical_lines must be non-negative");

    const auto w = c.quality.weights.values();
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!(w[i] > 0.0) || !std::isfinite(w[i]))
            fail("weight_" + std::string(quality_dimension_names[i]) + " must be strictly positive");
    if (!(c.quality.min_quality_score >= 0.0 && c.quality.min_quality_score <= 10.0))
        fail("min_quality_score must lie in [0, 10]");

    if (c.dedup.num_hashes == 0) fail("minhash_k must be positive");
    if (!(c.dedup.tau_lsh > 0.0 && c.dedup.tau_lsh < 1.0)) fail("tau_lsh must lie in (0, 1)");

    for (double a : {c.ai.alpha_gpt_phrase, c.ai.alpha_suspicious_structure, c.ai.alpha_perfect_structure,
                     c.ai.alpha_generic_language})
        if (!(a >= 0.0) || !std::isfinite(a)) fail("AI heuristic alphas must be non-negative");
    if (!(c.ai.tau_ai > 0.0 && c.ai.tau_ai <= 1.0)) fail("tau_ai must lie in (0, 1]");

    const auto& sp = c.split;
    for (double r : {sp.train, sp.validation, sp.test})
        if (!(r >= 0.0 && r <= 1.0)) fail("split ratios must lie in [0, 1]");
    if (std::abs(sp.train + sp.validation + sp.test - 1.0) > 1e-9) fail("split ratios must sum to 1.0");
    if (c.workers == 0) fail("workers must be at least 1");
}

PipelineConfig parse_config(std::string_view document, const std::filesystem::path& base_dir) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(document));
    } catch (const YAML::ParserException& e) {
        throw ConfigError("<document>", std::string("parse error: ") + e.what());
    }
    PipelineConfig config;
    if (root.IsNull()) {
        validate(config);
        return config;
    }
    if (!root.IsMap()) throw ConfigError("<document>", "top level must be a key/value mapping");

    for (const auto& entry : root) {
        const auto key = entry.first.as<std::string>();
        const auto& table = setters();
        const auto it = std::find_if(table.begin(), table.end(), [&](const auto& p) { return p.first == key; });
        if (it == table.end()) throw ConfigError(key, "unknown key");
        it->second(config, entry.second, key, base_dir);
    }
    validate(config);
    return config;
}

PipelineConfig load_config(const std::filesystem::path& path) {
    const std::string doc = read_file(path);
    return parse_config(doc, path.parent_path());
}

void override_seed(PipelineConfig& config, std::uint64_t seed) {
    config.dedup.seed = seed;
    config.split.seed = seed;
}

void apply_env_overrides(PipelineConfig& config) {
    auto parse_u64 = [](const char* name, const char* value) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(value, &used);
            if (used != std::string_view(value).size()) throw std::invalid_argument(value);
            return static_cast<std::uint64_t>(v);
        } catch (const std::exception&) {
            throw ConfigError(name, std::string("not an unsigned integer: ") + value);
        }
    };
    if (const char* seed = std::getenv("DOCPAIR_SEED"); seed && *seed)
        override_seed(config, parse_u64("DOCPAIR_SEED", seed));
    if (const char* workers = std::getenv("DOCPAIR_WORKERS"); workers && *workers) {
        const auto w = parse_u64("DOCPAIR_WORKERS", workers);
        if (w == 0 || w > std::numeric_limits<unsigned>::max()) throw ValidationError("DOCPAIR_WORKERS must be positive");
        config.workers = static_cast<unsigned>(w);
    }
}

nlohmann::ordered_json config_snapshot(const PipelineConfig& c) {
    auto pack_name = [](const std::filesystem::path& p) {
        return p.empty() ? std::string("builtin") : p.filename().string();
    };
    nlohmann::ordered_json j;
    j["min_doc_chars"] = c.stage1.min_doc_chars;
    j["max_doc_chars"] = c.stage1.max_doc_chars;
    j["min_complexity"] = c.stage1.min_complexity;
    j["max_complexity"] = c.stage1.max_complexity;
    j["min_logical_lines"] = c.stage1.min_logical_lines;
    j["accessor_prefixes"] = c.stage1.accessor_prefixes;
    j["accessor_max_logical_lines"] = c.stage1.accessor_max_logical_lines;
    j["test_patterns"] = c.stage1.test_patterns;
    j["test_path_segments"] = c.stage1.test_path_segments;
    j["placeholder_markers"] = c.stage1.placeholder_markers;
    const auto w = c.quality.weights.values();
    for (std::size_t i = 0; i < w.size(); ++i) j["weight_" + std::string(quality_dimension_names[i])] = w[i];
    j["min_quality_score"] = c.quality.min_quality_score;
    j["minhash_k"] = c.dedup.num_hashes;
    j["tau_lsh"] = c.dedup.tau_lsh;
    j["dedup_seed"] = c.dedup.seed;
    j["cross_language_dedup"] = c.dedup.cross_language;
    j["alpha_gpt_phrase"] = c.ai.alpha_gpt_phrase;
    j["alpha_suspicious_structure"] = c.ai.alpha_suspicious_structure;
    j["alpha_perfect_structure"] = c.ai.alpha_perfect_structure;
    j["alpha_generic_language"] = c.ai.alpha_generic_language;
    j["tau_ai"] = c.ai.tau_ai;
    j["gpt_phrase_pack"] = pack_name(c.ai.gpt_phrase_pack);
    j["generic_phrase_pack"] = pack_name(c.ai.generic_phrase_pack);
    j["split_train"] = c.split.train;
    j["split_validation"] = c.split.validation;
    j["split_test"] = c.split.test;
    j["split_seed"] = c.split.seed;
    j["ignore_globs"] = c.ignore_globs;
    return j;
}

}  // namespace docpair
