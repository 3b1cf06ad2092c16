#include "docpair/quality.hpp"

#include "docpair/doc_sections.hpp"
#include "docpair/lexing.hpp"
#include "docpair/text.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace docpair {

namespace quality_detail {

double appropriate_complexity_score(int complexity) noexcept {
    if (complexity <= 1) return 0.2;
    if (complexity <= 10) return 1.0;
    if (complexity >= 50) return 0.2;
    return 1.0 - 0.8 * (complexity - 10) / 40.0;
}

bool opens_with_action_word(std::string_view summary) {
    static constexpr std::array<std::string_view, 16> weak_openers{
        "a", "an", "the", "this", "that", "these", "those", "it", "its", "function", "method", "helper", "here", "we", "i",
        "my",
    };
    std::string_view s = text::trim(summary);
    std::size_t n = 0;
    while (n < s.size() && !text::is_space(s[n])) ++n;
    std::string_view word = s.substr(0, n);
    while (!word.empty() && (word.back() == ',' || word.back() == ':' || word.back() == '.')) word.remove_suffix(1);
    if (word.empty()) return false;
    for (char c : word)
        if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'))) return false;
    const std::string lower = text::to_lower(word);
    return std::find(weak_openers.begin(), weak_openers.end(), lower) == weak_openers.end();
}

namespace {

bool looks_like_code(std::string_view comment) {
    std::string_view c = text::trim(comment);
    while (!c.empty() && (c.front() == '/' || c.front() == '#' || c.front() == '*' || c.front() == '!'))
        c.remove_prefix(1);
    while (c.ends_with("*/")) c.remove_suffix(2);
    c = text::trim(c);
    if (c.empty()) return false;
    const char last = c.back();
    if (last == ';' || last == '{' || last == '}' || last == ')') return true;
    static constexpr std::array<std::string_view, 12> keywords{
        "if", "for", "while", "return", "def", "class", "import", "var", "let", "const", "print", "else",
    };
    for (auto kw : keywords) {
        if (c.starts_with(kw) && c.size() > kw.size() && (c[kw.size()] == ' ' || c[kw.size()] == '('))
            return true;
    }
    const auto eq = c.find(" = ");
    return eq != std::string_view::npos && eq > 0 && text::is_word_char(c[eq - 1]);
}

}  // namespace

double commented_out_code_ratio(std::string_view code, Language lang) {
    struct LineInfo {
        bool has_code = false;
        bool has_string = false;
        std::string comment;
    };
    std::vector<LineInfo> lines(1);
    for (const auto& seg : lexing::segment_source(code, lang)) {
        std::string_view rest = seg.text;
        while (true) {
            const std::size_t nl = rest.find('\n');
            const std::string_view piece = rest.substr(0, nl);
            LineInfo& info = lines.back();
            if (!text::trim(piece).empty()) {
                if (seg.kind == lexing::SegmentKind::code) info.has_code = true;
                else if (seg.kind == lexing::SegmentKind::string) info.has_string = true;
                else info.comment.append(piece);
            }
            if (nl == std::string_view::npos) break;
            lines.emplace_back();
            rest.remove_prefix(nl + 1);
        }
    }
    int non_blank = 0;
    int commented = 0;
    for (const auto& l : lines) {
        if (!l.has_code && !l.has_string && text::trim(l.comment).empty()) continue;
        ++non_blank;
        if (!l.has_code && !l.has_string && looks_like_code(l.comment)) ++commented;
    }
    return non_blank == 0 ? 0.0 : static_cast<double>(commented) / non_blank;
}

}  // namespace quality_detail

QualityDimensions assess_dimensions(const FunctionRecord& record) {
    const DocStructure doc = parse_doc(record.documentation);
    QualityDimensions q;

    const bool has_summary = !doc.summary.empty();
    const bool return_described =
        doc.has_returns || text::contains_phrase_icase(record.documentation, "returns") ||
        text::contains_phrase_icase(record.documentation, "return") ||
        text::contains_phrase_icase(record.documentation, "yields");

    int applicable = 1;
    int present = has_summary ? 1 : 0;
    if (!record.parameters.empty()) {
        ++applicable;
        if (doc.has_params) ++present;
    }
    if (record.returns_value) {
        ++applicable;
        if (return_described) ++present;
    }
    q.completeness = static_cast<double>(present) / applicable;

    const auto declared = [&](const std::string& name) {
        return std::find(record.parameters.begin(), record.parameters.end(), name) != record.parameters.end();
    };
    const auto documented_declared =
        std::count_if(doc.documented_params.begin(), doc.documented_params.end(), declared);

    if (record.parameters.empty()) {
        q.param_coverage = 1.0;
    } else {
        std::vector<std::string> unique_params = record.parameters;
        std::sort(unique_params.begin(), unique_params.end());
        unique_params.erase(std::unique(unique_params.begin(), unique_params.end()), unique_params.end());
        q.param_coverage = static_cast<double>(documented_declared) / static_cast<double>(unique_params.size());
    }

    q.return_coverage = (!record.returns_value || return_described) ? 1.0 : 0.0;
    q.type_annotations = record.has_type_annotations ? 1.0 : 0.0;

    const std::string sentence = first_sentence(doc.summary);
    const auto word_count = [](std::string_view s) {
        int n = 0;
        bool in_word = false;
        for (char c : s) {
            const bool space = text::is_space(c);
            if (!space && !in_word) ++n;
            in_word = !space;
        }
        return n;
    };
    q.clarity = ((word_count(sentence) >= 3 ? 1.0 : 0.0) +
                 (quality_detail::opens_with_action_word(doc.summary) ? 1.0 : 0.0) +
                 (word_count(record.documentation) > 1 ? 1.0 : 0.0)) /
                3.0;

    q.structural_consistency =
        doc.documented_params.empty()
            ? 1.0
            : static_cast<double>(documented_declared) / static_cast<double>(doc.documented_params.size());

    q.appropriate_complexity = quality_detail::appropriate_complexity_score(record.complexity);

    const double name_ok = text::code_points(record.name) >= 3 ? 1.0 : 0.0;
    double descriptive_params = 1.0;
    if (!record.parameters.empty()) {
        const auto longer = std::count_if(record.parameters.begin(), record.parameters.end(),
                                          [](const std::string& p) { return text::code_points(p) > 1; });
        descriptive_params = static_cast<double>(longer) / static_cast<double>(record.parameters.size());
    }
    const double body_ok = quality_detail::commented_out_code_ratio(record.code, record.language) < 0.5 ? 1.0 : 0.0;
    q.code_quality = (name_ok + descriptive_params + body_ok) / 3.0;
    return q;
}

double combine_scores(const QualityDimensions& dims, const QualityWeights& weights) {
    const auto q = dims.values();
    const auto w = weights.values();
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < quality_dimension_count; ++i) {
        num += w[i] * q[i];
        den += w[i];
    }
    return std::clamp(10.0 * num / den, 0.0, 10.0);
}

bool quality_gate(const QualityAssessment& assessment, double min_score) noexcept {
    return assessment.score >= min_score;
}

QualityAssessment assess_quality(const FunctionRecord& record, const QualityWeights& weights, double min_score) {
    QualityAssessment a;
    a.dimensions = assess_dimensions(record);
    a.weights = weights;
    a.score = combine_scores(a.dimensions, a.weights);
    a.passed = quality_gate(a, min_score);
    return a;
}

}  // namespace docpair
