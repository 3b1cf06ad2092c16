#include "docpair/doc_sections.hpp"

#include "docpair/text.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace docpair {

namespace {

struct HeaderWord {
    std::string_view word;
    DocSection kind;
};

// Lowercase section names shared by tags, Google/NumPy headers and Sphinx fields.
constexpr HeaderWord header_words[] = {
    {"args", DocSection::parameters},          {"arguments", DocSection::parameters},
    {"parameters", DocSection::parameters},    {"params", DocSection::parameters},
    {"param", DocSection::parameters},         {"arg", DocSection::parameters},
    {"argument", DocSection::parameters},      {"keyword args", DocSection::parameters},
    {"keyword arguments", DocSection::parameters}, {"kwargs", DocSection::parameters},
    {"other parameters", DocSection::parameters},  {"key", DocSection::parameters},
    {"keyword", DocSection::parameters},       {"type", DocSection::parameters},
    {"tparam", DocSection::other},
    {"returns", DocSection::returns},          {"return", DocSection::returns},
    {"yields", DocSection::returns},           {"yield", DocSection::returns},
    {"retval", DocSection::returns},           {"rtype", DocSection::returns},
    {"raises", DocSection::raises},            {"raise", DocSection::raises},
    {"throws", DocSection::raises},            {"throw", DocSection::raises},
    {"exceptions", DocSection::raises},        {"exception", DocSection::raises},
    {"except", DocSection::raises},
    {"example", DocSection::examples},         {"examples", DocSection::examples},
    {"usage", DocSection::examples},
    {"description", DocSection::description},  {"summary", DocSection::description},
    {"brief", DocSection::description},        {"details", DocSection::description},
    {"note", DocSection::other},               {"notes", DocSection::other},
    {"see also", DocSection::other},           {"see", DocSection::other},
    {"warning", DocSection::other},            {"warnings", DocSection::other},
    {"attributes", DocSection::other},         {"references", DocSection::other},
    {"since", DocSection::other},              {"deprecated", DocSection::other},
    {"author", DocSection::other},             {"version", DocSection::other},
    {"todo", DocSection::other},
};

std::optional<DocSection> lookup_header(std::string_view word) {
    const std::string lower = text::to_lower(word);
    for (const auto& h : header_words)
        if (h.word == lower) return h.kind;
    return std::nullopt;
}

std::size_t indent_of(std::string_view line) {
    std::size_t n = 0;
    while (n < line.size() && (line[n] == ' ' || line[n] == '\t')) ++n;
    return n;
}

bool is_dash_rule(std::string_view t) {
    return t.size() >= 3 && t.find_first_not_of('-') == std::string_view::npos;
}

std::string_view leading_word(std::string_view s) {
    std::size_t n = 0;
    while (n < s.size() && text::is_word_char(s[n])) ++n;
    return s.substr(0, n);
}

// "*args (int): ..." or "name: ..." -> "args" / "name".
std::optional<std::string> google_entry_name(std::string_view t) {
    while (!t.empty() && t.front() == '*') t.remove_prefix(1);
    const std::string_view name = leading_word(t);
    if (name.empty()) return std::nullopt;
    const std::string_view rest = text::trim_left(t.substr(name.size()));
    if (rest.starts_with(":") || rest.starts_with("(")) return std::string(name);
    return std::nullopt;
}

// "x, y : int" or "x" -> names.
std::vector<std::string> numpy_entry_names(std::string_view t) {
    std::vector<std::string> names;
    const std::size_t colon = t.find(':');
    std::string_view head = text::trim(t.substr(0, colon));
    while (!head.empty()) {
        std::string_view item = head.substr(0, head.find(','));
        head = head.size() > item.size() ? head.substr(item.size() + 1) : std::string_view{};
        item = text::trim(item);
        while (!item.empty() && item.front() == '*') item.remove_prefix(1);
        if (item.empty() || leading_word(item).size() != item.size()) return {};
        names.emplace_back(item);
        head = text::trim_left(head);
    }
    return names;
}

// Parameter name after a @param tag: skips [in,out] direction, {type} and [optional=default] syntax.
std::string tag_param_name(std::string_view rest) {
    rest = text::trim_left(rest);
    if (rest.starts_with("[")) {  // Doxygen direction
        const std::size_t close = rest.find(']');
        if (close != std::string_view::npos && close < 12) rest = text::trim_left(rest.substr(close + 1));
    }
    if (rest.starts_with("{")) {
        int depth = 0;
        std::size_t i = 0;
        for (; i < rest.size(); ++i) {
            if (rest[i] == '{') ++depth;
            else if (rest[i] == '}' && --depth == 0) break;
        }
        rest = text::trim_left(rest.substr(std::min(i + 1, rest.size())));
    }
    bool optional = false;
    if (rest.starts_with("[")) {
        optional = true;
        rest.remove_prefix(1);
    }
    while (rest.starts_with(".")) rest.remove_prefix(1);
    std::size_t n = 0;
    while (n < rest.size() && (text::is_word_char(rest[n]) || rest[n] == '$' || (optional && rest[n] == '.'))) ++n;
    std::string name(rest.substr(0, n));
    // "[options.verbose]" documents a property of `options`.
    if (const auto dot = name.find('.'); dot != std::string::npos) name.resize(dot);
    return name;
}

// Header line such as "Args:" / "Returns: int" / "Keyword Args:"; nullopt otherwise.
std::optional<DocSection> google_header(std::string_view t) {
    const std::size_t colon = t.find(':');
    if (colon == std::string_view::npos || colon == 0) return std::nullopt;
    const std::string_view word = t.substr(0, colon);
    if (std::count(word.begin(), word.end(), ' ') > 1) return std::nullopt;
    for (char c : word)
        if (!(text::is_word_char(c) || c == ' ')) return std::nullopt;
    auto kind = lookup_header(word);
    if (!kind) return std::nullopt;
    // Only result/raise/example headers may carry inline text.
    const std::string_view after = text::trim(t.substr(colon + 1));
    if (!after.empty() && *kind == DocSection::parameters) return std::nullopt;
    if (!after.empty() && colon + 1 < t.size() && t[colon + 1] != ' ') return std::nullopt;
    return kind;
}

enum class Mode { prose, tag, google, numpy, doctest, trailing };

class Parser {
public:
    explicit Parser(std::string_view doc) : lines_(text::split_lines(doc)) {}

    DocStructure run() {
        for (std::size_t i = 0; i < lines_.size(); ++i) {
            std::string_view line = lines_[i];
            if (line.ends_with('\r')) line.remove_suffix(1);
            const std::string_view t = text::trim(line);
            if (t.empty()) continue;
            const std::size_t indent = indent_of(line);

            if (t.starts_with(">>>")) {
                open(DocSection::examples, Mode::doctest, indent);
                continue;
            }
            if (tag_line(t)) continue;
            if (sphinx_field(t)) continue;
            if (i + 1 < lines_.size() && is_dash_rule(text::trim(lines_[i + 1]))) {
                if (auto kind = lookup_header(t)) {
                    open(*kind, Mode::numpy, indent);
                    ++i;
                    continue;
                }
            }
            if (auto kind = google_header(t); kind && !(mode_ == Mode::google && indent > section_indent_)) {
                open(*kind, Mode::google, indent);
                entry_indent_.reset();
                continue;
            }
            content(t, indent);
        }
        out_.summary = text::collapse_whitespace(summary_);
        if (!out_.summary.empty()) out_.has_description = true;
        return std::move(out_);
    }

private:
    void open(DocSection kind, Mode mode, std::size_t indent) {
        if (out_.section_order.empty() || out_.section_order.back() != kind) out_.section_order.push_back(kind);
        switch (kind) {
            case DocSection::description: out_.has_description = true; break;
            case DocSection::parameters: out_.has_params = true; break;
            case DocSection::returns: out_.has_returns = true; break;
            case DocSection::raises: out_.has_raises = true; break;
            case DocSection::examples: out_.has_examples = true; break;
            case DocSection::other: break;
        }
        current_ = kind;
        mode_ = mode;
        section_indent_ = indent;
    }

    void add_param(std::string name) {
        if (name.empty()) return;
        if (std::find(out_.documented_params.begin(), out_.documented_params.end(), name) ==
            out_.documented_params.end())
            out_.documented_params.push_back(std::move(name));
    }

    bool tag_line(std::string_view t) {
        if (t.size() < 2 || !(t[0] == '@' || t[0] == '\\') || !text::is_word_char(t[1])) return false;
        const std::string_view word = leading_word(t.substr(1));
        auto kind = lookup_header(word);
        if (!kind) {
            // Unknown tags (@see, @since, @override ...) still end the prose block.
            if (t[0] == '\\') return false;
            kind = DocSection::other;
        }
        const std::string_view rest = t.substr(1 + word.size());
        if (*kind == DocSection::description) {
            if (mode_ == Mode::prose) {
                summary_ += ' ';
                summary_.append(rest);
            }
            open(DocSection::description, Mode::tag, 0);
            return true;
        }
        // @type annotates a variable, not a parameter list entry.
        if (text::to_lower(word) == "type") kind = DocSection::other;
        open(*kind, Mode::tag, 0);
        if (*kind == DocSection::parameters) add_param(tag_param_name(rest));
        return true;
    }

    bool sphinx_field(std::string_view t) {
        if (t.size() < 3 || t[0] != ':' || !text::is_word_char(t[1])) return false;
        const std::size_t close = t.find(':', 1);
        if (close == std::string_view::npos) return false;
        const std::string_view inner = t.substr(1, close - 1);
        const std::string_view word = leading_word(inner);
        auto kind = lookup_header(word);
        if (!kind) return false;
        open(*kind, Mode::tag, 0);
        const std::string lw = text::to_lower(word);
        if (*kind == DocSection::parameters && lw != "type") {
            std::string_view args = text::trim(inner.substr(word.size()));
            const std::size_t sp = args.find_last_of(' ');
            if (sp != std::string_view::npos) args = args.substr(sp + 1);
            while (!args.empty() && args.front() == '*') args.remove_prefix(1);
            add_param(std::string(args));
        }
        return true;
    }

    void content(std::string_view t, std::size_t indent) {
        switch (mode_) {
            case Mode::prose:
                if (out_.section_order.empty()) out_.section_order.push_back(DocSection::description);
                summary_ += ' ';
                summary_.append(t);
                return;
            case Mode::google:
                if (indent <= section_indent_) {
                    mode_ = Mode::trailing;
                    return;
                }
                if (current_ == DocSection::parameters) {
                    if (!entry_indent_) entry_indent_ = indent;
                    if (indent == *entry_indent_)
                        if (auto name = google_entry_name(t)) add_param(std::move(*name));
                }
                return;
            case Mode::numpy:
                if (current_ == DocSection::parameters && indent == section_indent_)
                    for (auto& n : numpy_entry_names(t)) add_param(std::move(n));
                return;
            case Mode::doctest:
            case Mode::tag:
            case Mode::trailing:
                return;
        }
    }

    std::vector<std::string_view> lines_;
    DocStructure out_;
    std::string summary_;
    Mode mode_ = Mode::prose;
    DocSection current_ = DocSection::description;
    std::size_t section_indent_ = 0;
    std::optional<std::size_t> entry_indent_;
};

}  // namespace

DocStructure parse_doc(std::string_view documentation) { return Parser(documentation).run(); }

std::string first_sentence(std::string_view summary) {
    const std::string s = text::collapse_whitespace(summary);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '.' || s[i] == '!' || s[i] == '?') {
            if (i + 1 == s.size() || s[i + 1] == ' ') return s.substr(0, i + 1);
        }
    }
    return s;
}

}  // namespace docpair
