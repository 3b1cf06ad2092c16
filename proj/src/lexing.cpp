#include "docpair/lexing.hpp"

#include "docpair/text.hpp"

namespace docpair::lexing {

namespace {

struct Syntax {
    bool hash_comments = false;
    bool c_comments = false;
    bool triple_quotes = false;
    bool backtick_strings = false;
    bool raw_strings = false;     // C++ R"delim(...)delim"
    bool digit_separator = false; // C++ 1'000
};

Syntax syntax_for(std::optional<Language> lang) {
    if (!lang) return {.hash_comments = true, .c_comments = true, .triple_quotes = true};
    switch (*lang) {
        case Language::python: return {.hash_comments = true, .triple_quotes = true};
        case Language::java: return {.c_comments = true, .triple_quotes = true};
        case Language::javascript:
        case Language::typescript: return {.c_comments = true, .backtick_strings = true};
        case Language::cpp: return {.c_comments = true, .raw_strings = true, .digit_separator = true};
    }
    return {};
}

// End of a quoted literal starting at `i` (which holds the quote); handles escapes.
std::size_t scan_quoted(std::string_view s, std::size_t i, std::string_view quote, bool multiline) {
    std::size_t j = i + quote.size();
    while (j < s.size()) {
        if (s[j] == '\\') {
            j += 2;
            continue;
        }
        if (!multiline && s[j] == '\n') return j;
        if (s.compare(j, quote.size(), quote) == 0) return j + quote.size();
        ++j;
    }
    return s.size();
}

bool raw_string_start(std::string_view s, std::size_t i) {
    if (s[i] != 'R' || i + 1 >= s.size() || s[i + 1] != '"') return false;
    std::size_t p = i;
    // Optional encoding prefix directly before R.
    if (p >= 2 && s.compare(p - 2, 2, "u8") == 0) p -= 2;
    else if (p >= 1 && (s[p - 1] == 'u' || s[p - 1] == 'U' || s[p - 1] == 'L')) p -= 1;
    return p == 0 || !text::is_word_char(s[p - 1]);
}

std::size_t scan_raw_string(std::string_view s, std::size_t i) {
    const std::size_t open = s.find('(', i + 2);
    if (open == std::string_view::npos) return s.size();
    const std::string close = ")" + std::string(s.substr(i + 2, open - (i + 2))) + "\"";
    const std::size_t end = s.find(close, open + 1);
    return end == std::string_view::npos ? s.size() : end + close.size();
}

}  // namespace

std::vector<Segment> segment_source(std::string_view s, std::optional<Language> lang) {
    const Syntax syn = syntax_for(lang);
    std::vector<Segment> out;
    std::size_t code_start = 0;
    auto flush_code = [&](std::size_t end) {
        if (end > code_start) out.push_back({SegmentKind::code, s.substr(code_start, end - code_start)});
    };
    auto emit = [&](SegmentKind kind, std::size_t begin, std::size_t end) {
        flush_code(begin);
        out.push_back({kind, s.substr(begin, end - begin)});
        code_start = end;
    };

    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        const char next = i + 1 < s.size() ? s[i + 1] : '\0';
        if (syn.hash_comments && c == '#') {
            const std::size_t end = std::min(s.find('\n', i), s.size());
            emit(SegmentKind::comment, i, end);
            i = end;
        } else if (syn.c_comments && c == '/' && next == '/') {
            const std::size_t end = std::min(s.find('\n', i), s.size());
            emit(SegmentKind::comment, i, end);
            i = end;
        } else if (syn.c_comments && c == '/' && next == '*') {
            const std::size_t close = s.find("*/", i + 2);
            const std::size_t end = close == std::string_view::npos ? s.size() : close + 2;
            emit(SegmentKind::comment, i, end);
            i = end;
        } else if (syn.raw_strings && raw_string_start(s, i)) {
            const std::size_t end = scan_raw_string(s, i);
            emit(SegmentKind::string, i, end);
            i = end;
        } else if (syn.triple_quotes && (s.compare(i, 3, "\"\"\"") == 0 || s.compare(i, 3, "'''") == 0)) {
            const std::size_t end = scan_quoted(s, i, s.substr(i, 3), true);
            emit(SegmentKind::string, i, end);
            i = end;
        } else if (c == '"' || c == '\'' || (syn.backtick_strings && c == '`')) {
            if (c == '\'' && syn.digit_separator && i > 0 && text::is_digit(s[i - 1])) {
                ++i;
                continue;
            }
            const std::size_t end = scan_quoted(s, i, s.substr(i, 1), c == '`');
            emit(SegmentKind::string, i, end);
            i = end;
        } else {
            ++i;
        }
    }
    flush_code(s.size());
    return out;
}

int count_logical_lines(std::string_view code, std::optional<Language> lang) {
    if (code.empty()) return 0;
    std::vector<bool> has_code(1, false);
    for (const auto& seg : segment_source(code, lang)) {
        for (char c : seg.text) {
            if (c == '\n') {
                has_code.push_back(false);
            } else if (seg.kind != SegmentKind::comment && !text::is_space(c)) {
                has_code.back() = true;
            }
        }
    }
    int count = 0;
    for (bool b : has_code) count += b ? 1 : 0;
    return count;
}

}  // namespace docpair::lexing
