#include "docpair/ai_detect.hpp"

#include "docpair/doc_sections.hpp"
#include "docpair/errors.hpp"
#include "docpair/ingestion.hpp"
#include "docpair/text.hpp"

#include "builtin_packs.hpp"

#include <algorithm>
#include <cmath>

namespace docpair {

namespace {

std::string_view section_label(DocSection s) {
    switch (s) {
        case DocSection::description: return "description";
        case DocSection::parameters: return "parameters";
        case DocSection::returns: return "returns";
        case DocSection::raises: return "raises";
        case DocSection::examples: return "examples";
        case DocSection::other: return "other";
    }
    return "other";
}

bool has_uniformity_marker(std::string_view tmpl) {
    if (tmpl.find("•") != std::string_view::npos) return true;
    return tmpl.find_first_of(":-*|=") != std::string_view::npos;
}

constexpr std::size_t min_parallel_lines = 4;

}  // namespace

std::string_view heuristic_name(Heuristic h) noexcept {
    switch (h) {
        case Heuristic::gpt_phrase: return "gpt_phrase";
        case Heuristic::suspicious_structure: return "suspicious_structure";
        case Heuristic::perfect_structure: return "perfect_structure";
        case Heuristic::generic_language: return "generic_language";
    }
    return "unknown";
}

PhrasePack parse_phrase_pack(std::string_view source, std::string name) {
    PhrasePack pack;
    pack.name = std::move(name);
    pack.digest = text::sha256_hex(source);
    for (std::string_view line : text::split_lines(source)) {
        const std::string_view t = text::trim(line);
        if (t.empty() || t.front() == '#') continue;
        std::string phrase = text::to_lower(text::collapse_whitespace(t));
        if (std::find(pack.phrases.begin(), pack.phrases.end(), phrase) == pack.phrases.end())
            pack.phrases.push_back(std::move(phrase));
    }
    return pack;
}

PhrasePack load_phrase_pack(const std::filesystem::path& path) {
    return parse_phrase_pack(read_file(path), path.filename().string());
}

const PhrasePack& builtin_gpt_phrase_pack() {
    static const PhrasePack pack = parse_phrase_pack(builtin_packs::gpt_style, "builtin:gpt_style.txt");
    return pack;
}

const PhrasePack& builtin_generic_phrase_pack() {
    static const PhrasePack pack = parse_phrase_pack(builtin_packs::generic, "builtin:generic.txt");
    return pack;
}

PhrasePacks load_phrase_packs(const AiConfig& config) {
    return {
        config.gpt_phrase_pack.empty() ? builtin_gpt_phrase_pack() : load_phrase_pack(config.gpt_phrase_pack),
        config.generic_phrase_pack.empty() ? builtin_generic_phrase_pack()
                                           : load_phrase_pack(config.generic_phrase_pack),
    };
}

std::optional<HeuristicHit> match_gpt_phrases(std::string_view doc, const PhrasePack& pack, double alpha) {
    for (const auto& phrase : pack.phrases)
        if (text::contains_phrase_icase(doc, phrase)) return HeuristicHit{Heuristic::gpt_phrase, alpha, phrase};
    return std::nullopt;
}

std::optional<HeuristicHit> detect_perfect_structure(std::string_view doc, double alpha) {
    const DocStructure s = parse_doc(doc);
    if (s.canonical_section_count() < 4) return std::nullopt;
    std::string evidence;
    const std::pair<bool, DocSection> present[] = {
        {s.has_description, DocSection::description}, {s.has_params, DocSection::parameters},
        {s.has_returns, DocSection::returns},         {s.has_raises, DocSection::raises},
        {s.has_examples, DocSection::examples},
    };
    for (const auto& [has, kind] : present) {
        if (!has) continue;
        if (!evidence.empty()) evidence += '+';
        evidence += section_label(kind);
    }
    return HeuristicHit{Heuristic::perfect_structure, alpha, evidence};
}

std::string line_template(std::string_view line) {
    std::string out;
    bool in_word = false;
    for (std::size_t i = 0; i < line.size();) {
        if (line.substr(i).starts_with("•")) {
            out += "•";
            in_word = false;
            i += 3;
            continue;
        }
        const unsigned char c = static_cast<unsigned char>(line[i]);
        const bool wordish = text::is_word_char(static_cast<char>(c)) || c == ' ' || c == '\t' || c >= 0x80;
        if (wordish) {
            if (!in_word) out += 'w';
            in_word = true;
        } else {
            out += static_cast<char>(c);
            in_word = false;
        }
        ++i;
    }
    return out;
}

std::optional<HeuristicHit> detect_suspicious_structure(std::string_view doc, double alpha) {
    // Rule 1: a run of parallel lines sharing one punctuation skeleton.
    std::string run_template;
    std::size_t run_length = 0;
    for (std::string_view line : text::split_lines(doc)) {
        const std::string_view t = text::trim(line);
        if (t.empty()) {
            run_length = 0;
            continue;
        }
        std::string tmpl = line_template(t);
        if (run_length > 0 && tmpl == run_template) {
            ++run_length;
        } else {
            run_template = std::move(tmpl);
            run_length = 1;
        }
        if (run_length >= min_parallel_lines && has_uniformity_marker(run_template))
            return HeuristicHit{Heuristic::suspicious_structure, alpha,
                                "uniform_lines:" + run_template + "x" + std::to_string(min_parallel_lines)};
    }

    // Rule 2: the same ordered run of sections appears twice.
    const auto order = parse_doc(doc).section_order;
    const std::size_t n = order.size();
    for (std::size_t len = n / 2; len >= 2; --len) {
        for (std::size_t i = 0; i + 2 * len <= n; ++i) {
            for (std::size_t j = i + len; j + len <= n; ++j) {
                if (!std::equal(order.begin() + i, order.begin() + i + len, order.begin() + j)) continue;
                std::string evidence = "repeated_sections:";
                for (std::size_t k = i; k < i + len; ++k) {
                    if (k > i) evidence += '>';
                    evidence += section_label(order[k]);
                }
                return HeuristicHit{Heuristic::suspicious_structure, alpha, evidence};
            }
        }
    }
    return std::nullopt;
}

std::optional<HeuristicHit> detect_generic_language(std::string_view doc, const PhrasePack& pack, double alpha) {
    std::vector<std::string_view> matched;
    for (const auto& phrase : pack.phrases)
        if (text::contains_phrase_icase(doc, phrase)) matched.push_back(phrase);
    if (matched.size() < 2) return std::nullopt;
    std::string evidence;
    for (std::size_t i = 0; i < matched.size(); ++i) {
        if (i > 0) evidence += '|';
        evidence.append(matched[i]);
    }
    return HeuristicHit{Heuristic::generic_language, alpha, evidence};
}

AIDetectionResult ai_likelihood(std::string_view doc, const AiConfig& config, const PhrasePacks& packs) {
    AIDetectionResult r;
    const std::optional<HeuristicHit> candidates[] = {
        match_gpt_phrases(doc, packs.gpt_style, config.alpha_gpt_phrase),
        detect_suspicious_structure(doc, config.alpha_suspicious_structure),
        detect_perfect_structure(doc, config.alpha_perfect_structure),
        detect_generic_language(doc, packs.generic, config.alpha_generic_language),
    };
    double sum = 0.0;
    for (const auto& hit : candidates) {
        if (!hit) continue;
        sum += hit->alpha;
        r.hits.push_back(*hit);
    }
    r.score = std::min(1.0, sum);
    r.flagged = r.score >= config.tau_ai;
    return r;
}

}  // namespace docpair
