#pragma once

#include "docpair/language.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <tree_sitter/api.h>

namespace docpair {

struct SourceFileRef;

// Raised when the parser produces no tree at all; the file is skipped.
struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Owns a concrete syntax tree together with the UTF-8 text it was parsed from.
// Trees over malformed input still exist; broken regions appear as ERROR nodes.
class SyntaxTree {
public:
    SyntaxTree(Language lang, std::string source, bool tsx = false);

    Language language() const noexcept { return language_; }
    std::string_view source() const noexcept { return source_; }
    TSNode root() const noexcept { return ts_tree_root_node(tree_.get()); }
    bool has_errors() const noexcept { return ts_node_has_error(root()); }

    std::string_view text(TSNode node) const noexcept;

private:
    struct TreeDeleter {
        void operator()(TSTree* t) const noexcept { ts_tree_delete(t); }
    };

    Language language_;
    std::string source_;
    std::unique_ptr<TSTree, TreeDeleter> tree_;
};

// Decodes `contents` lossily as UTF-8 and parses it with the file's grammar
// (.tsx files use the TSX dialect).
SyntaxTree parse_file(const SourceFileRef& file, std::string_view contents);

// Thin helpers over the tree-sitter C API.
namespace ts {

inline std::string_view kind(TSNode n) noexcept { return ts_node_type(n); }
TSNode field(TSNode n, std::string_view name) noexcept;
// First named child whose kind equals `k`, or a null node.
TSNode child_of_kind(TSNode n, std::string_view k) noexcept;
// True if some direct child (named or anonymous) has kind `k`.
bool has_token(TSNode n, std::string_view k) noexcept;
inline unsigned start_row(TSNode n) noexcept { return ts_node_start_point(n).row; }
inline unsigned end_row(TSNode n) noexcept { return ts_node_end_point(n).row; }

}  // namespace ts

}  // namespace docpair
