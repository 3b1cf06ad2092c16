#include "docpair/extraction.hpp"

#include "docpair/lexing.hpp"
#include "docpair/text.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace docpair {

namespace {

LanguageProfile make_python() {
    return {
        .language = Language::python,
        .doc_attachment = DocAttachment::docstring_inside_body,
        .doc_comment_markers = {"\"\"\"", "'''"},
        .function_node_kinds = {"function_definition"},
        .wrapper_node_kinds = {"decorated_definition"},
        .decorator_node_kinds = {"decorator"},
        .comment_node_kinds = {"comment"},
        .decision_node_kinds = {"if_statement", "elif_clause", "for_statement", "while_statement", "except_clause",
                                "except_group_clause", "conditional_expression", "for_in_clause", "if_clause"},
        .case_label_kinds = {"case_clause"},
        .boolean_operator_kinds = {"boolean_operator"},
        .short_circuit_operators = {"and", "or"},
    };
}

LanguageProfile make_java() {
    return {
        .language = Language::java,
        .doc_attachment = DocAttachment::comment_preceding_definition,
        .doc_comment_markers = {"/**"},
        .function_node_kinds = {"method_declaration", "constructor_declaration", "compact_constructor_declaration"},
        .wrapper_node_kinds = {},
        .decorator_node_kinds = {},
        .comment_node_kinds = {"block_comment", "line_comment"},
        .decision_node_kinds = {"if_statement", "for_statement", "enhanced_for_statement", "while_statement",
                                "do_statement", "catch_clause", "ternary_expression"},
        .case_label_kinds = {"switch_label"},
        .boolean_operator_kinds = {"binary_expression"},
        .short_circuit_operators = {"&&", "||"},
    };
}

LanguageProfile make_ecmascript(Language lang) {
    return {
        .language = lang,
        .doc_attachment = DocAttachment::comment_preceding_definition,
        .doc_comment_markers = {"/**"},
        .function_node_kinds = {"function_declaration", "generator_function_declaration", "method_definition"},
        .wrapper_node_kinds = {"export_statement"},
        .decorator_node_kinds = {"decorator"},
        .comment_node_kinds = {"comment"},
        .decision_node_kinds = {"if_statement", "for_statement", "for_in_statement", "while_statement",
                                "do_statement", "catch_clause", "ternary_expression", "switch_case"},
        .case_label_kinds = {},
        .boolean_operator_kinds = {"binary_expression"},
        .short_circuit_operators = {"&&", "||", "??"},
    };
}

LanguageProfile make_cpp() {
    return {
        .language = Language::cpp,
        .doc_attachment = DocAttachment::comment_preceding_definition,
        .doc_comment_markers = {"/**", "/*!", "///", "//!"},
        .function_node_kinds = {"function_definition"},
        .wrapper_node_kinds = {"template_declaration"},
        .decorator_node_kinds = {},
        .comment_node_kinds = {"comment"},
        .decision_node_kinds = {"if_statement", "for_statement", "for_range_loop", "while_statement",
                                "do_statement", "catch_clause", "conditional_expression"},
        .case_label_kinds = {"case_statement"},
        .boolean_operator_kinds = {"binary_expression"},
        .short_circuit_operators = {"&&", "||", "and", "or"},
    };
}

// Nodes whose bodies do not belong to the enclosing function when scanning returns.
bool opens_new_scope(Language lang, std::string_view kind) {
    switch (lang) {
        case Language::python:
            return kind == "function_definition" || kind == "lambda" || kind == "class_definition";
        case Language::java:
            return kind == "method_declaration" || kind == "lambda_expression" || kind == "class_body" ||
                   kind == "constructor_declaration";
        case Language::javascript:
        case Language::typescript:
            return kind == "function_declaration" || kind == "function_expression" || kind == "function" ||
                   kind == "arrow_function" || kind == "method_definition" || kind == "class_body" ||
                   kind == "generator_function_declaration" || kind == "generator_function";
        case Language::cpp:
            return kind == "function_definition" || kind == "lambda_expression" || kind == "field_declaration_list";
    }
    return false;
}

template <typename Visit>
void walk_subtree(TSNode root, Visit&& visit) {
    // Pre-order, explicit stack; visit returns false to skip the node's children.
    std::vector<TSNode> stack{root};
    while (!stack.empty()) {
        TSNode n = stack.back();
        stack.pop_back();
        if (!visit(n)) continue;
        for (std::uint32_t i = ts_node_named_child_count(n); i-- > 0;) stack.push_back(ts_node_named_child(n, i));
    }
}

bool operator_token_in(TSNode n, const std::set<std::string, std::less<>>& ops) {
    const std::uint32_t count = ts_node_child_count(n);
    for (std::uint32_t i = 0; i < count; ++i) {
        TSNode c = ts_node_child(n, i);
        if (!ts_node_is_named(c) && ops.contains(ts::kind(c))) return true;
    }
    return false;
}

bool is_default_label(TSNode n, std::string_view source) {
    if (ts::has_token(n, "default")) return true;
    if (ts::kind(n) == "case_clause") {
        // Python `case _:` is the match default.
        TSNode pattern = ts::child_of_kind(n, "case_pattern");
        if (!ts_node_is_null(pattern)) {
            const auto b = ts_node_start_byte(pattern), e = ts_node_end_byte(pattern);
            return text::trim(source.substr(b, e - b)) == "_";
        }
    }
    return false;
}

// ---- names and parameters -------------------------------------------------

TSNode cpp_function_declarator(TSNode def) {
    TSNode d = ts::field(def, "declarator");
    while (!ts_node_is_null(d) && ts::kind(d) != "function_declarator") {
        TSNode inner = ts::field(d, "declarator");
        if (ts_node_is_null(inner)) {
            // reference_declarator carries its inner declarator as an unnamed-field child
            inner = ts_node_named_child_count(d) > 0 ? ts_node_named_child(d, ts_node_named_child_count(d) - 1)
                                                     : TSNode{};
        }
        d = inner;
    }
    return d;
}

std::string cpp_unqualified_name(const SyntaxTree& tree, TSNode n) {
    while (!ts_node_is_null(n)) {
        const auto k = ts::kind(n);
        if (k == "qualified_identifier" || k == "template_function" || k == "template_method") {
            n = ts::field(n, "name");
            continue;
        }
        return std::string(tree.text(n));
    }
    return {};
}

std::string function_name(const SyntaxTree& tree, TSNode def) {
    if (tree.language() == Language::cpp) {
        TSNode decl = cpp_function_declarator(def);
        if (ts_node_is_null(decl)) return {};
        return cpp_unqualified_name(tree, ts::field(decl, "declarator"));
    }
    TSNode name = ts::field(def, "name");
    return ts_node_is_null(name) ? std::string{} : std::string(tree.text(name));
}

std::string first_identifier(const SyntaxTree& tree, TSNode n) {
    std::string found;
    walk_subtree(n, [&](TSNode c) {
        if (!found.empty()) return false;
        const auto k = ts::kind(c);
        if (k == "identifier") {
            found = tree.text(c);
            return false;
        }
        // Never descend into types, defaults or nested parameter lists.
        return !(k == "parameter_list" || k == "type_qualifier" || k == "template_argument_list" ||
                 k == "type_identifier" || k == "primitive_type" || k == "qualified_identifier");
    });
    return found;
}

TSNode parameters_node(const SyntaxTree& tree, TSNode def) {
    if (tree.language() == Language::cpp) {
        TSNode decl = cpp_function_declarator(def);
        return ts_node_is_null(decl) ? TSNode{} : ts::field(decl, "parameters");
    }
    return ts::field(def, "parameters");
}

std::vector<std::string> parameter_names(const SyntaxTree& tree, TSNode def) {
    std::vector<std::string> names;
    TSNode params = parameters_node(tree, def);
    if (ts_node_is_null(params)) return names;

    auto push = [&](std::string name) {
        if (!name.empty()) names.push_back(std::move(name));
    };
    const std::uint32_t count = ts_node_named_child_count(params);
    for (std::uint32_t i = 0; i < count; ++i) {
        TSNode p = ts_node_named_child(params, i);
        const auto k = ts::kind(p);
        switch (tree.language()) {
            case Language::python:
                if (k == "identifier") {
                    push(std::string(tree.text(p)));
                } else if (k == "default_parameter" || k == "typed_default_parameter") {
                    push(std::string(tree.text(ts::field(p, "name"))));
                } else if (k == "typed_parameter" || k == "list_splat_pattern" || k == "dictionary_splat_pattern") {
                    push(first_identifier(tree, p));
                }
                break;
            case Language::java:
                if (k == "formal_parameter") {
                    push(std::string(tree.text(ts::field(p, "name"))));
                } else if (k == "spread_parameter") {
                    TSNode vd = ts::child_of_kind(p, "variable_declarator");
                    if (!ts_node_is_null(vd)) push(std::string(tree.text(ts::field(vd, "name"))));
                }
                break;
            case Language::javascript:
            case Language::typescript: {
                TSNode target = p;
                if (k == "required_parameter" || k == "optional_parameter") target = ts::field(p, "pattern");
                if (ts_node_is_null(target)) break;
                const auto tk = ts::kind(target);
                if (tk == "identifier") {
                    push(std::string(tree.text(target)));
                } else if (tk == "assignment_pattern") {
                    TSNode left = ts::field(target, "left");
                    if (!ts_node_is_null(left) && ts::kind(left) == "identifier") push(std::string(tree.text(left)));
                } else if (tk == "rest_pattern") {
                    TSNode id = ts::child_of_kind(target, "identifier");
                    if (!ts_node_is_null(id)) push(std::string(tree.text(id)));
                }
                break;
            }
            case Language::cpp:
                if (k == "parameter_declaration" || k == "optional_parameter_declaration" ||
                    k == "variadic_parameter_declaration") {
                    TSNode d = ts::field(p, "declarator");
                    if (!ts_node_is_null(d)) push(first_identifier(tree, d));
                }
                break;
        }
    }
    if (tree.language() == Language::python && !names.empty() && (names.front() == "self" || names.front() == "cls"))
        names.erase(names.begin());
    return names;
}

// ---- return behaviour -----------------------------------------------------

bool body_returns_value(const SyntaxTree& tree, TSNode body) {
    bool found = false;
    walk_subtree(body, [&](TSNode n) {
        if (found) return false;
        const auto k = ts::kind(n);
        if (!ts_node_eq(n, body) && opens_new_scope(tree.language(), k)) return false;
        if (k == "return_statement" && ts_node_named_child_count(n) > 0) {
            // A lone comment child is not a value.
            for (std::uint32_t i = 0; i < ts_node_named_child_count(n); ++i)
                if (ts::kind(ts_node_named_child(n, i)) != "comment") found = true;
        } else if (k == "yield" || k == "yield_expression") {
            found = true;
        }
        return !found;
    });
    return found;
}

bool returns_value(const SyntaxTree& tree, TSNode def, TSNode body, std::string_view name) {
    const auto k = ts::kind(def);
    switch (tree.language()) {
        case Language::python: {
            TSNode rt = ts::field(def, "return_type");
            if (!ts_node_is_null(rt)) return text::trim(tree.text(rt)) != "None";
            return body_returns_value(tree, body);
        }
        case Language::java: {
            if (k != "method_declaration") return false;
            TSNode type = ts::field(def, "type");
            return ts_node_is_null(type) || ts::kind(type) != "void_type";
        }
        case Language::javascript:
        case Language::typescript: {
            if (k == "generator_function_declaration" || ts::has_token(def, "*")) return true;
            if (name == "constructor") return false;
            TSNode rt = ts::field(def, "return_type");
            if (!ts_node_is_null(rt)) {
                std::string_view t = text::trim(tree.text(rt));
                if (!t.empty() && t.front() == ':') t = text::trim(t.substr(1));
                return !(t == "void" || t == "never" || t == "undefined" || t == "Promise<void>");
            }
            return body_returns_value(tree, body);
        }
        case Language::cpp: {
            TSNode type = ts::field(def, "type");
            if (ts_node_is_null(type)) return false;  // constructors, destructors, conversion operators
            TSNode decl = cpp_function_declarator(def);
            TSNode outer = ts::field(def, "declarator");
            const bool pointer_or_ref = !ts_node_is_null(outer) && !ts_node_eq(outer, decl);
            if (ts::kind(type) == "placeholder_type_specifier") {
                TSNode trailing = ts_node_is_null(decl) ? TSNode{} : ts::child_of_kind(decl, "trailing_return_type");
                if (!ts_node_is_null(trailing)) {
                    std::string_view t = text::trim(tree.text(trailing));
                    if (t.starts_with("->")) t = text::trim(t.substr(2));
                    return t != "void";
                }
                return pointer_or_ref || body_returns_value(tree, body);
            }
            return pointer_or_ref || text::trim(tree.text(type)) != "void";
        }
    }
    return false;
}

// ---- documentation --------------------------------------------------------

bool has_doc_marker(std::string_view comment, const LanguageProfile& profile) {
    if (comment.starts_with("/**/")) return false;
    for (const auto& m : profile.doc_comment_markers)
        if (comment.starts_with(m)) {
            // "////" banners are not doc comments
            if (m == "///" && comment.size() > 3 && comment[3] == '/') return false;
            return true;
        }
    return false;
}

TSNode python_docstring_node(TSNode body) {
    const std::uint32_t count = ts_node_named_child_count(body);
    for (std::uint32_t i = 0; i < count; ++i) {
        TSNode stmt = ts_node_named_child(body, i);
        if (ts::kind(stmt) == "comment") continue;
        if (ts::kind(stmt) != "expression_statement" || ts_node_named_child_count(stmt) != 1) return TSNode{};
        TSNode s = ts_node_named_child(stmt, 0);
        return ts::kind(s) == "string" ? s : TSNode{};
    }
    return TSNode{};
}

std::string preceding_doc(const SyntaxTree& tree, TSNode def, const LanguageProfile& profile) {
    TSNode anchor = def;
    for (TSNode parent = ts_node_parent(anchor);
         !ts_node_is_null(parent) && profile.wrapper_node_kinds.contains(ts::kind(parent));
         parent = ts_node_parent(parent))
        anchor = parent;

    unsigned anchor_row = ts::start_row(anchor);
    TSNode prev = ts_node_prev_named_sibling(anchor);
    while (!ts_node_is_null(prev) && profile.decorator_node_kinds.contains(ts::kind(prev))) {
        anchor_row = ts::start_row(prev);
        prev = ts_node_prev_named_sibling(prev);
    }

    std::vector<std::string_view> parts;
    unsigned next_row = anchor_row;
    while (!ts_node_is_null(prev) && profile.comment_node_kinds.contains(ts::kind(prev))) {
        const std::string_view c = tree.text(prev);
        if (!has_doc_marker(c, profile)) break;
        if (ts::end_row(prev) + 1 < next_row) break;  // blank line gap
        parts.push_back(c);
        // Only runs of line comments (///, //!) continue upwards.
        if (!c.starts_with("//")) break;
        next_row = ts::start_row(prev);
        prev = ts_node_prev_named_sibling(prev);
        if (!ts_node_is_null(prev) && !tree.text(prev).starts_with("//")) break;
    }
    if (parts.empty()) return {};
    std::reverse(parts.begin(), parts.end());
    std::string joined;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) joined += '\n';
        joined.append(parts[i]);
    }
    return strip_doc_comment(joined);
}

std::string make_signature(const SyntaxTree& tree, TSNode def, TSNode body) {
    const auto b = ts_node_start_byte(def), e = ts_node_start_byte(body);
    std::string sig = text::collapse_whitespace(tree.source().substr(b, e - b));
    if (tree.language() == Language::python && !sig.empty() && sig.back() == ':') {
        sig.pop_back();
        sig = std::string(text::trim_right(sig));
    }
    return sig;
}

// Byte offset of the start of `row` (0-based) in source.
std::size_t line_start(std::string_view source, unsigned row) {
    std::size_t pos = 0;
    for (unsigned r = 0; r < row; ++r) {
        pos = source.find('\n', pos);
        if (pos == std::string_view::npos) return source.size();
        ++pos;
    }
    return pos;
}

}  // namespace

const LanguageProfile& profile_for(Language lang) {
    static const LanguageProfile python = make_python();
    static const LanguageProfile java = make_java();
    static const LanguageProfile javascript = make_ecmascript(Language::javascript);
    static const LanguageProfile typescript = make_ecmascript(Language::typescript);
    static const LanguageProfile cpp = make_cpp();
    switch (lang) {
        case Language::python: return python;
        case Language::java: return java;
        case Language::javascript: return javascript;
        case Language::typescript: return typescript;
        case Language::cpp: return cpp;
    }
    throw std::invalid_argument("unknown language");
}

std::string make_record_id(std::string_view repo_name, std::string_view path, int start_line, std::string_view name) {
    std::string id;
    id.reserve(repo_name.size() + path.size() + name.size() + 16);
    id.append(repo_name).append(":").append(path).append(":").append(std::to_string(start_line)).append(":").append(name);
    return id;
}

int compute_cyclomatic_complexity(TSNode function_node, std::string_view source, const LanguageProfile& profile) {
    int decisions = 0;
    walk_subtree(function_node, [&](TSNode n) {
        const auto k = ts::kind(n);
        if (!ts_node_eq(n, function_node) && profile.function_node_kinds.contains(k)) return false;
        if (k == "ERROR") return false;
        if (profile.decision_node_kinds.contains(k)) {
            ++decisions;
        } else if (profile.case_label_kinds.contains(k)) {
            if (!is_default_label(n, source)) ++decisions;
        } else if (profile.boolean_operator_kinds.contains(k)) {
            if (operator_token_in(n, profile.short_circuit_operators)) ++decisions;
        }
        return true;
    });
    return 1 + decisions;
}

std::string strip_doc_comment(std::string_view comment) {
    std::string body;
    const auto lines = text::split_lines(comment);
    const std::string_view trimmed = text::trim(comment);
    if (trimmed.starts_with("//")) {
        for (std::size_t i = 0; i < lines.size(); ++i) {
            std::string_view l = text::trim_left(lines[i]);
            if (l.starts_with("///") || l.starts_with("//!")) l.remove_prefix(3);
            else if (l.starts_with("//")) l.remove_prefix(2);
            if (i > 0) body += '\n';
            body.append(l);
        }
        return text::dedent(body);
    }

    std::string_view inner = trimmed;
    if (inner.starts_with("/*")) inner.remove_prefix(2);
    while (!inner.empty() && (inner.front() == '*' || inner.front() == '!')) inner.remove_prefix(1);
    if (inner.ends_with("*/")) inner.remove_suffix(2);
    while (!inner.empty() && inner.back() == '*') inner.remove_suffix(1);

    const auto inner_lines = text::split_lines(inner);
    for (std::size_t i = 0; i < inner_lines.size(); ++i) {
        std::string_view l = inner_lines[i];
        std::string_view lt = text::trim_left(l);
        if (lt.starts_with("*")) {
            lt.remove_prefix(1);
            l = lt;
        } else if (i == 0) {
            l = lt;
        }
        if (i > 0) body += '\n';
        body.append(l);
    }
    return text::dedent(body);
}

std::string strip_docstring(std::string_view literal) {
    std::size_t i = 0;
    while (i < literal.size() && literal[i] != '"' && literal[i] != '\'') ++i;
    std::string_view rest = literal.substr(i);
    std::size_t q = 1;
    if (rest.starts_with("\"\"\"") || rest.starts_with("'''")) q = 3;
    if (rest.size() < 2 * q) return {};
    const std::string_view content = rest.substr(q, rest.size() - 2 * q);

    // inspect.cleandoc: first line is stripped, later lines are dedented together.
    const auto lines = text::split_lines(content);
    std::string tail;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        if (k > 1) tail += '\n';
        tail.append(lines[k]);
    }
    std::string joined(text::trim(lines.front()));
    const std::string dedented = lines.size() > 1 ? text::dedent(tail) : std::string{};
    if (!dedented.empty()) {
        if (!joined.empty()) {
            joined += '\n';
            // dedent() drops the blank lines between the summary line and the body
            for (std::size_t k = 1; k < lines.size() && text::trim(lines[k]).empty(); ++k) joined += '\n';
        }
        joined += dedented;
    }
    return std::string(text::trim(joined));
}

bool detect_type_annotations(const FunctionRecord& record) {
    if (is_statically_typed(record.language)) return true;
    if (record.language == Language::javascript) {
        const std::string& d = record.documentation;
        for (const char* tag : {"@param", "@arg", "@argument", "@returns", "@return", "@type"}) {
            for (std::size_t pos = d.find(tag); pos != std::string::npos; pos = d.find(tag, pos + 1)) {
                std::string_view after = text::trim_left(std::string_view(d).substr(pos + std::strlen(tag)));
                if (after.starts_with("{")) return true;
            }
        }
        return false;
    }

    // Python and TypeScript: a ':' at parameter-list depth or a return annotation.
    const std::string& sig = record.signature;
    std::size_t open = sig.find('(');
    if (open == std::string::npos) return false;
    int depth = 0;
    bool lambda_pending = false;
    std::size_t close = std::string::npos;
    for (const auto& seg : lexing::segment_source(std::string_view(sig).substr(open), record.language)) {
        if (seg.kind != lexing::SegmentKind::code) continue;
        const std::size_t base = static_cast<std::size_t>(seg.text.data() - sig.data());
        for (std::size_t j = 0; j < seg.text.size() && close == std::string::npos; ++j) {
            const char c = seg.text[j];
            if (c == '(' || c == '[' || c == '{' || c == '<') {
                if (c != '<' || record.language == Language::typescript) ++depth;
            } else if (c == ')' || c == ']' || c == '}' || c == '>') {
                if (c == '>' && (record.language != Language::typescript || (j > 0 && seg.text[j - 1] == '=')))
                    continue;
                if (--depth == 0) close = base + j;
            } else if (c == ':' && depth == 1) {
                if (lambda_pending) lambda_pending = false;
                else return true;
            } else if (depth == 1 && seg.text.substr(j).starts_with("lambda") &&
                       (j == 0 || !text::is_word_char(seg.text[j - 1]))) {
                lambda_pending = true;
            }
        }
        if (close != std::string::npos) break;
    }
    if (close == std::string::npos) return false;
    const std::string_view after = text::trim_left(std::string_view(sig).substr(close + 1));
    return after.starts_with("->") || after.starts_with(":");
}

std::vector<FunctionRecord> extract_functions(const SyntaxTree& tree, const LanguageProfile& profile,
                                              const SourceFileRef& file, std::string_view repo_name) {
    std::vector<FunctionRecord> records;
    const std::string_view source = tree.source();

    walk_subtree(tree.root(), [&](TSNode node) {
        const auto k = ts::kind(node);
        if (k == "ERROR") return false;
        if (!profile.function_node_kinds.contains(k)) return true;
        if (ts_node_has_error(node)) return true;

        TSNode body = ts::field(node, "body");
        std::string name = function_name(tree, node);
        if (ts_node_is_null(body) || name.empty()) return true;

        FunctionRecord r;
        r.repo_name = std::string(repo_name);
        r.path = file.relative_path.empty() ? file.path.generic_string() : file.relative_path;
        r.language = profile.language;
        r.name = std::move(name);
        r.start_line = static_cast<int>(ts::start_row(node)) + 1;
        r.end_line = static_cast<int>(ts::end_row(node)) + 1;
        r.id = make_record_id(r.repo_name, r.path, r.start_line, r.name);
        r.signature = make_signature(tree, node, body);

        const std::size_t code_begin = line_start(source, ts::start_row(node));
        std::size_t code_end = source.find('\n', ts_node_end_byte(node) > 0 ? ts_node_end_byte(node) - 1 : 0);
        if (code_end == std::string_view::npos) code_end = source.size();
        std::string code(source.substr(code_begin, code_end - code_begin));
        if (!code.empty() && code.back() == '\r') code.pop_back();

        std::string counted = code;
        if (profile.doc_attachment == DocAttachment::docstring_inside_body) {
            TSNode doc = python_docstring_node(body);
            if (!ts_node_is_null(doc)) {
                r.documentation = strip_docstring(tree.text(doc));
                const std::size_t b = ts_node_start_byte(doc) - code_begin;
                const std::size_t e = std::min<std::size_t>(ts_node_end_byte(doc) - code_begin, counted.size());
                for (std::size_t i = b; i < e; ++i)
                    if (counted[i] != '\n') counted[i] = ' ';
            }
        } else {
            r.documentation = preceding_doc(tree, node, profile);
        }

        r.code = std::move(code);
        r.complexity = compute_cyclomatic_complexity(node, source, profile);
        r.logical_lines = lexing::count_logical_lines(counted, profile.language);
        r.parameters = parameter_names(tree, node);
        r.returns_value = returns_value(tree, node, body, r.name);
        r.has_type_annotations = detect_type_annotations(r);
        records.push_back(std::move(r));
        return true;
    });
    return records;
}

std::vector<FunctionRecord> extract_file(const SourceFileRef& file, std::string_view contents,
                                         std::string_view repo_name) {
    const SyntaxTree tree = parse_file(file, contents);
    return extract_functions(tree, profile_for(file.language), file, repo_name);
}

}  // namespace docpair
