#include "docpair/basic_filter.hpp"

#include "docpair/text.hpp"

#include <algorithm>

namespace docpair {

namespace {

// A camelCase/snake_case boundary right after a matched prefix.
bool boundary_after(std::string_view name, std::size_t pos) {
    return pos == name.size() || name[pos] == '_' || text::is_upper(name[pos]) || text::is_digit(name[pos]);
}

bool matches_pattern(std::string_view name, std::string_view pattern) {
    if (pattern.empty() || name.empty()) return false;
    if (pattern.back() == '_') return name.starts_with(pattern);
    if (pattern.front() == '_') return name.ends_with(pattern);

    if (name.starts_with(pattern) && boundary_after(name, pattern.size())) return true;
    if (name.size() > pattern.size() && name.ends_with(pattern)) {
        const char before = name[name.size() - pattern.size() - 1];
        if (before == '_') return true;
        // parseTest, but not FOOTEST or latest
        if (text::is_upper(pattern.front()) && (text::is_lower(before) || text::is_digit(before))) return true;
    }
    return false;
}

}  // namespace

std::string_view filter_reason_name(FilterReason reason) noexcept {
    switch (reason) {
        case FilterReason::missing_documentation: return "missing_documentation";
        case FilterReason::doc_too_short: return "doc_too_short";
        case FilterReason::doc_too_long: return "doc_too_long";
        case FilterReason::complexity_too_low: return "complexity_too_low";
        case FilterReason::complexity_too_high: return "complexity_too_high";
        case FilterReason::too_few_logical_lines: return "too_few_logical_lines";
        case FilterReason::is_test: return "is_test";
        case FilterReason::is_trivial_accessor: return "is_trivial_accessor";
        case FilterReason::has_placeholder: return "has_placeholder";
        case FilterReason::ok: return "ok";
    }
    return "unknown";
}

bool is_test_name(std::string_view name, const Stage1Config& config) {
    return std::any_of(config.test_patterns.begin(), config.test_patterns.end(),
                       [&](const std::string& p) { return matches_pattern(name, p); });
}

bool is_test_function(const FunctionRecord& record, const Stage1Config& config) {
    if (is_test_name(record.name, config)) return true;

    std::string_view path = record.path;
    std::size_t slash;
    while ((slash = path.find_first_of("/\\")) != std::string_view::npos) {
        const std::string_view dir = path.substr(0, slash);
        if (std::find(config.test_path_segments.begin(), config.test_path_segments.end(), dir) !=
            config.test_path_segments.end())
            return true;
        path.remove_prefix(slash + 1);
    }
    // File name: every dot-separated piece except the extension ("parser.test.ts").
    const std::size_t ext = path.rfind('.');
    std::string_view stem = ext == std::string_view::npos ? path : path.substr(0, ext);
    while (!stem.empty()) {
        const std::size_t dot = stem.find('.');
        if (is_test_name(stem.substr(0, dot), config)) return true;
        if (dot == std::string_view::npos) break;
        stem.remove_prefix(dot + 1);
    }
    return false;
}

bool is_trivial_accessor(const FunctionRecord& record, const Stage1Config& config) {
    if (record.logical_lines > config.accessor_max_logical_lines) return false;
    std::string_view name = record.name;
    while (name.starts_with("_")) name.remove_prefix(1);
    return std::any_of(config.accessor_prefixes.begin(), config.accessor_prefixes.end(), [&](const std::string& p) {
        return !p.empty() && text::starts_with_icase(name, p) && boundary_after(name, p.size());
    });
}

bool has_placeholder_text(std::string_view documentation, const Stage1Config& config) {
    return std::any_of(config.placeholder_markers.begin(), config.placeholder_markers.end(),
                       [&](const std::string& m) { return text::contains_token(documentation, m); });
}

FilterVerdict apply_basic_filters(const FunctionRecord& record, const Stage1Config& config) {
    if (text::trim(record.documentation).empty()) return {FilterReason::missing_documentation};
    const std::size_t chars = text::code_points(record.documentation);
    if (chars < config.min_doc_chars) return {FilterReason::doc_too_short};
    if (chars > config.max_doc_chars) return {FilterReason::doc_too_long};
    if (record.complexity < config.min_complexity) return {FilterReason::complexity_too_low};
    if (record.complexity > config.max_complexity) return {FilterReason::complexity_too_high};
    if (record.logical_lines < config.min_logical_lines) return {FilterReason::too_few_logical_lines};
    if (is_test_function(record, config)) return {FilterReason::is_test};
    if (is_trivial_accessor(record, config)) return {FilterReason::is_trivial_accessor};
    if (has_placeholder_text(record.documentation, config)) return {FilterReason::has_placeholder};
    return {FilterReason::ok};
}

}  // namespace docpair
