#include "docpair/language.hpp"

#include "docpair/text.hpp"

namespace docpair {

std::string_view language_name(Language lang) noexcept {
    switch (lang) {
        case Language::python: return "python";
        case Language::java: return "java";
        case Language::typescript: return "typescript";
        case Language::javascript: return "javascript";
        case Language::cpp: return "cpp";
    }
    return "unknown";
}

std::optional<Language> parse_language(std::string_view name) noexcept {
    const std::string n = text::to_lower(name);
    if (n == "python" || n == "py") return Language::python;
    if (n == "java") return Language::java;
    if (n == "typescript" || n == "ts") return Language::typescript;
    if (n == "javascript" || n == "js") return Language::javascript;
    if (n == "cpp" || n == "c++") return Language::cpp;
    return std::nullopt;
}

std::optional<Language> detect_language(const std::filesystem::path& path) {
    const std::string ext = text::to_lower(path.extension().string());
    if (ext == ".py") return Language::python;
    if (ext == ".java") return Language::java;
    if (ext == ".ts" || ext == ".tsx") return Language::typescript;
    if (ext == ".js" || ext == ".jsx") return Language::javascript;
    if (ext == ".cpp" || ext == ".cc" || ext == ".cxx" || ext == ".h" || ext == ".hpp") return Language::cpp;
    return std::nullopt;
}

}  // namespace docpair
