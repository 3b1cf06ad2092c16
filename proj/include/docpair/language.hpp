#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string_view>

namespace docpair {

enum class Language { python, java, typescript, javascript, cpp };

inline constexpr std::array<Language, 5> all_languages{
    Language::python, Language::java, Language::typescript, Language::javascript, Language::cpp};

std::string_view language_name(Language lang) noexcept;

// Inverse of language_name; also accepts a few common aliases ("c++", "ts", "js", "py").
std::optional<Language> parse_language(std::string_view name) noexcept;

// Extension-based detection. Header files are treated as C++.
std::optional<Language> detect_language(const std::filesystem::path& path);

// True for languages whose signatures always carry parameter/return types.
constexpr bool is_statically_typed(Language lang) noexcept {
    return lang == Language::java || lang == Language::cpp;
}

}  // namespace docpair
