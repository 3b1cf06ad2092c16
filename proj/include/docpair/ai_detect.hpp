#pragma once

#include "docpair/config.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace docpair {

enum class Heuristic { gpt_phrase, suspicious_structure, perfect_structure, generic_language };

std::string_view heuristic_name(Heuristic h) noexcept;

struct HeuristicHit {
    Heuristic heuristic;
    double alpha;
    std::string evidence;
};

struct AIDetectionResult {
    double score = 0.0;
    std::vector<HeuristicHit> hits;
    bool flagged = false;
};

// Plain-text pattern list: one phrase per line, '#' starts a comment line.
struct PhrasePack {
    std::string name;
    std::vector<std::string> phrases;
    std::string digest;  // SHA-256 of the source text
};

PhrasePack parse_phrase_pack(std::string_view text, std::string name);
PhrasePack load_phrase_pack(const std::filesystem::path& path);
const PhrasePack& builtin_gpt_phrase_pack();
const PhrasePack& builtin_generic_phrase_pack();

struct PhrasePacks {
    PhrasePack gpt_style;
    PhrasePack generic;
};

// Packs named in the config, or the built-in ones for empty paths.
PhrasePacks load_phrase_packs(const AiConfig& config);

std::optional<HeuristicHit> match_gpt_phrases(std::string_view doc, const PhrasePack& pack,
                                              double alpha = 0.3);
std::optional<HeuristicHit> detect_perfect_structure(std::string_view doc, double alpha = 0.2);
std::optional<HeuristicHit> detect_suspicious_structure(std::string_view doc, double alpha = 0.2);
std::optional<HeuristicHit> detect_generic_language(std::string_view doc, const PhrasePack& pack,
                                                    double alpha = 0.1);

// min(1, sum of fired alphas); flagged iff score >= tau_ai. Never removes anything.
AIDetectionResult ai_likelihood(std::string_view doc, const AiConfig& config, const PhrasePacks& packs);

// Punctuation skeleton of a line: word/space runs become 'w', punctuation is kept.
std::string line_template(std::string_view line);

}  // namespace docpair
