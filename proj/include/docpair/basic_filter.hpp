#pragma once

#include "docpair/config.hpp"
#include "docpair/extraction.hpp"

#include <string_view>

namespace docpair {

enum class FilterReason {
    missing_documentation,
    doc_too_short,
    doc_too_long,
    complexity_too_low,
    complexity_too_high,
    too_few_logical_lines,
    is_test,
    is_trivial_accessor,
    has_placeholder,
    ok,
};

std::string_view filter_reason_name(FilterReason reason) noexcept;

struct FilterVerdict {
    FilterReason reason = FilterReason::ok;
    bool passed() const noexcept { return reason == FilterReason::ok; }
};

// First violated criterion in fixed order: documentation present, length bounds,
// complexity bounds, logical lines, test patterns, accessor, placeholder text.
FilterVerdict apply_basic_filters(const FunctionRecord& record, const Stage1Config& config);

// Name matches a pattern as a prefix/suffix at a word boundary, or a path segment
// (directory or file stem) is a test directory or matches the same name rule.
bool is_test_function(const FunctionRecord& record, const Stage1Config& config);
bool is_test_name(std::string_view name, const Stage1Config& config);

// Accessor-style prefix at a camelCase/snake_case boundary AND a tiny body.
bool is_trivial_accessor(const FunctionRecord& record, const Stage1Config& config);

bool has_placeholder_text(std::string_view documentation, const Stage1Config& config);

}  // namespace docpair
