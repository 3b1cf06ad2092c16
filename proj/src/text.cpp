#include "docpair/text.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>

#include <openssl/evp.h>

namespace docpair::text {

namespace {

// Length of the valid UTF-8 sequence starting at s[i], or 0 if invalid.
std::size_t utf8_sequence_length(std::string_view s, std::size_t i) noexcept {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) return 1;
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        return 0;
    }
    if (i + len > s.size()) return 0;
    for (std::size_t k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80) return 0;
        cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong forms, surrogates and out-of-range code points.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000)) return 0;
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return 0;
    return len;
}

}  // namespace

std::string sanitize_utf8(std::string_view bytes) {
    std::string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    while (i < bytes.size()) {
        const std::size_t len = utf8_sequence_length(bytes, i);
        if (len == 0) {
            out += "\xEF\xBF\xBD";
            ++i;
        } else {
            out.append(bytes.substr(i, len));
            i += len;
        }
    }
    return out;
}

std::size_t code_points(std::string_view s) noexcept {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

bool is_space(char c) noexcept {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}
bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }
bool is_upper(char c) noexcept { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) noexcept { return c >= 'a' && c <= 'z'; }
bool is_word_char(char c) noexcept { return is_digit(c) || is_upper(c) || is_lower(c) || c == '_'; }

std::string_view trim_left(std::string_view s) noexcept {
    std::size_t i = 0;
    while (i < s.size() && is_space(s[i])) ++i;
    return s.substr(i);
}

std::string_view trim_right(std::string_view s) noexcept {
    std::size_t n = s.size();
    while (n > 0 && is_space(s[n - 1])) --n;
    return s.substr(0, n);
}

std::string_view trim(std::string_view s) noexcept { return trim_right(trim_left(s)); }

std::vector<std::string_view> split_lines(std::string_view s) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    for (;;) {
        const std::size_t nl = s.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(s.substr(start));
            break;
        }
        lines.push_back(s.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    for (char c : s) {
        if (is_space(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) out += ' ';
        pending_space = false;
        out += c;
    }
    return out;
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (is_upper(c)) c = static_cast<char>(c - 'A' + 'a');
    return out;
}

bool starts_with_icase(std::string_view s, std::string_view prefix) noexcept {
    if (prefix.size() > s.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        char a = s[i], b = prefix[i];
        if (is_upper(a)) a = static_cast<char>(a - 'A' + 'a');
        if (is_upper(b)) b = static_cast<char>(b - 'A' + 'a');
        if (a != b) return false;
    }
    return true;
}

std::string dedent(std::string_view s) {
    auto lines = split_lines(s);
    std::size_t indent = std::numeric_limits<std::size_t>::max();
    for (auto line : lines) {
        line = trim_right(line);
        if (line.empty()) continue;
        std::size_t k = 0;
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
        indent = std::min(indent, k);
    }
    if (indent == std::numeric_limits<std::size_t>::max()) return {};

    std::vector<std::string_view> cleaned;
    cleaned.reserve(lines.size());
    for (auto line : lines) {
        line = trim_right(line);
        cleaned.push_back(line.size() >= indent ? line.substr(indent) : std::string_view{});
    }
    std::size_t first = 0, last = cleaned.size();
    while (first < last && cleaned[first].empty()) ++first;
    while (last > first && cleaned[last - 1].empty()) --last;

    std::string out;
    for (std::size_t i = first; i < last; ++i) {
        if (i > first) out += '\n';
        out.append(cleaned[i]);
    }
    return out;
}

namespace {

bool boundary_ok(std::string_view hay, std::size_t pos, std::size_t len, std::string_view needle) noexcept {
    if (!needle.empty() && is_word_char(needle.front()) && pos > 0 && is_word_char(hay[pos - 1])) return false;
    if (!needle.empty() && is_word_char(needle.back()) && pos + len < hay.size() && is_word_char(hay[pos + len]))
        return false;
    return true;
}

}  // namespace

bool contains_phrase_icase(std::string_view haystack, std::string_view needle) {
    if (needle.empty()) return false;
    const std::string hay = to_lower(collapse_whitespace(haystack));
    const std::string ndl = to_lower(collapse_whitespace(needle));
    for (std::size_t pos = hay.find(ndl); pos != std::string::npos; pos = hay.find(ndl, pos + 1)) {
        if (boundary_ok(hay, pos, ndl.size(), ndl)) return true;
    }
    return false;
}

bool contains_token(std::string_view haystack, std::string_view token) {
    if (token.empty()) return false;
    for (std::size_t pos = haystack.find(token); pos != std::string_view::npos;
         pos = haystack.find(token, pos + 1)) {
        const bool left = pos == 0 || !is_word_char(haystack[pos - 1]);
        const bool right = pos + token.size() >= haystack.size() || !is_word_char(haystack[pos + token.size()]);
        if (left && right) return true;
    }
    return false;
}

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr);
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 0xF];
    }
    return out;
}

}  // namespace docpair::text
