#pragma once

#include "docpair/language.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Comment/string aware scanning of source text, independent of the parsers.
namespace docpair::lexing {

enum class SegmentKind { code, string, comment };

struct Segment {
    SegmentKind kind;
    std::string_view text;
};

// Splits source into code, string-literal and comment segments. With no language
// both '#' and C-style comments are recognized.
std::vector<Segment> segment_source(std::string_view source, std::optional<Language> lang = std::nullopt);

// Lines that are neither blank nor comment-only.
int count_logical_lines(std::string_view code, std::optional<Language> lang = std::nullopt);

}  // namespace docpair::lexing
