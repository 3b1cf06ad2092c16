#include "docpair/syntax.hpp"

#include "docpair/ingestion.hpp"
#include "docpair/text.hpp"

#include <memory>

extern "C" {
const TSLanguage* tree_sitter_python();
const TSLanguage* tree_sitter_java();
const TSLanguage* tree_sitter_javascript();
const TSLanguage* tree_sitter_typescript();
const TSLanguage* tree_sitter_tsx();
const TSLanguage* tree_sitter_cpp();
}

namespace docpair {

namespace {

const TSLanguage* grammar_for(Language lang, bool tsx) {
    switch (lang) {
        case Language::python: return tree_sitter_python();
        case Language::java: return tree_sitter_java();
        case Language::javascript: return tree_sitter_javascript();
        case Language::typescript: return tsx ? tree_sitter_tsx() : tree_sitter_typescript();
        case Language::cpp: return tree_sitter_cpp();
    }
    return nullptr;
}

struct ParserDeleter {
    void operator()(TSParser* p) const noexcept { ts_parser_delete(p); }
};

}  // namespace

SyntaxTree::SyntaxTree(Language lang, std::string source, bool tsx)
    : language_(lang), source_(std::move(source)) {
    std::unique_ptr<TSParser, ParserDeleter> parser(ts_parser_new());
    if (!parser || !ts_parser_set_language(parser.get(), grammar_for(lang, tsx)))
        throw ParseFailure("incompatible grammar for " + std::string(language_name(lang)));
    tree_.reset(ts_parser_parse_string(parser.get(), nullptr, source_.data(),
                                       static_cast<std::uint32_t>(source_.size())));
    if (!tree_) throw ParseFailure("parser produced no tree");
}

std::string_view SyntaxTree::text(TSNode node) const noexcept {
    if (ts_node_is_null(node)) return {};
    const auto begin = ts_node_start_byte(node);
    const auto end = ts_node_end_byte(node);
    return std::string_view(source_).substr(begin, end - begin);
}

SyntaxTree parse_file(const SourceFileRef& file, std::string_view contents) {
    const bool tsx = text::to_lower(file.path.extension().string()) == ".tsx";
    return SyntaxTree(file.language, text::sanitize_utf8(contents), tsx);
}

namespace ts {

TSNode field(TSNode n, std::string_view name) noexcept {
    return ts_node_child_by_field_name(n, name.data(), static_cast<std::uint32_t>(name.size()));
}

TSNode child_of_kind(TSNode n, std::string_view k) noexcept {
    const std::uint32_t count = ts_node_named_child_count(n);
    for (std::uint32_t i = 0; i < count; ++i) {
        TSNode c = ts_node_named_child(n, i);
        if (kind(c) == k) return c;
    }
    return TSNode{};
}

bool has_token(TSNode n, std::string_view k) noexcept {
    const std::uint32_t count = ts_node_child_count(n);
    for (std::uint32_t i = 0; i < count; ++i)
        if (kind(ts_node_child(n, i)) == k) return true;
    return false;
}

}  // namespace ts

}  // namespace docpair
