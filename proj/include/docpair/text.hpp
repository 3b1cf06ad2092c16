#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Small string helpers shared by the stages. All functions treat input as UTF-8.
namespace docpair::text {

// Replaces invalid UTF-8 sequences with U+FFFD.
std::string sanitize_utf8(std::string_view bytes);

// Number of Unicode code points in valid UTF-8.
std::size_t code_points(std::string_view s) noexcept;

std::string_view trim(std::string_view s) noexcept;
std::string_view trim_left(std::string_view s) noexcept;
std::string_view trim_right(std::string_view s) noexcept;

// Splits on '\n'; a trailing '\r' is kept on each line. An empty string yields one empty line.
std::vector<std::string_view> split_lines(std::string_view s);

// Collapses every run of ASCII whitespace to one space and trims both ends.
std::string collapse_whitespace(std::string_view s);

std::string to_lower(std::string_view s);

bool is_word_char(char c) noexcept;
bool is_upper(char c) noexcept;
bool is_lower(char c) noexcept;
bool is_digit(char c) noexcept;
bool is_space(char c) noexcept;

bool starts_with_icase(std::string_view s, std::string_view prefix) noexcept;

// Removes the common leading indentation of all non-blank lines, strips trailing
// whitespace per line, and drops leading/trailing blank lines.
std::string dedent(std::string_view s);

// Case-insensitive search for `needle` in `haystack` where the match must not be
// embedded in a longer word (boundaries are checked only on word characters).
bool contains_phrase_icase(std::string_view haystack, std::string_view needle);

// Whole-token, case-sensitive search: `token` must not touch word characters on either side.
bool contains_token(std::string_view haystack, std::string_view token);

// Lowercase hex encoding of a SHA-256 digest over `data`.
std::string sha256_hex(std::string_view data);

}  // namespace docpair::text
