#pragma once

#include "docpair/ingestion.hpp"
#include "docpair/language.hpp"
#include "docpair/syntax.hpp"

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace docpair {

enum class DocAttachment { docstring_inside_body, comment_preceding_definition };

// Grammar-level description of how one language is mined.
struct LanguageProfile {
    Language language;
    DocAttachment doc_attachment;
    std::vector<std::string> doc_comment_markers;
    // Named function definitions; anonymous forms (lambdas, arrows) are absent here.
    std::set<std::string, std::less<>> function_node_kinds;
    // Nodes that wrap a definition and own the preceding doc comment (export, template, ...).
    std::set<std::string, std::less<>> wrapper_node_kinds;
    std::set<std::string, std::less<>> decorator_node_kinds;
    std::set<std::string, std::less<>> comment_node_kinds;
    // Each occurrence adds one decision point.
    std::set<std::string, std::less<>> decision_node_kinds;
    // Case labels of these kinds count only when they are not `default` labels.
    std::set<std::string, std::less<>> case_label_kinds;
    // Binary nodes that add a decision when their operator is short-circuiting.
    std::set<std::string, std::less<>> boolean_operator_kinds;
    std::set<std::string, std::less<>> short_circuit_operators;
};

const LanguageProfile& profile_for(Language lang);

struct FunctionRecord {
    std::string id;
    std::string repo_name;
    std::string path;
    Language language = Language::python;
    std::string name;
    std::string signature;
    std::string code;           // the verbatim source lines start_line..end_line
    std::string documentation;  // delimiter-stripped, empty when absent
    int start_line = 1;
    int end_line = 1;
    int complexity = 1;
    int logical_lines = 0;
    bool has_type_annotations = false;
    // Declared parameter names (receiver parameters such as self/cls excluded).
    std::vector<std::string> parameters;
    // False for void/None/constructor-like functions.
    bool returns_value = false;
};

std::string make_record_id(std::string_view repo_name, std::string_view path, int start_line,
                           std::string_view name);

// One record per named function or method in source order, skipping any
// definition that overlaps an ERROR region.
std::vector<FunctionRecord> extract_functions(const SyntaxTree& tree, const LanguageProfile& profile,
                                              const SourceFileRef& file, std::string_view repo_name);

// parse_file followed by extract_functions. Throws ParseFailure.
std::vector<FunctionRecord> extract_file(const SourceFileRef& file, std::string_view contents,
                                         std::string_view repo_name);

// 1 + decision points inside the body; nested named functions are excluded.
int compute_cyclomatic_complexity(TSNode function_node, std::string_view source,
                                  const LanguageProfile& profile);

// Typed signature (Java, C++, annotated Python/TypeScript) or JSDoc type tags for JavaScript.
bool detect_type_annotations(const FunctionRecord& record);

// Doc comment text without delimiters, leading asterisks and common indentation.
std::string strip_doc_comment(std::string_view comment);

// Python docstring literal (with prefix and quotes) to its cleaned content.
std::string strip_docstring(std::string_view literal);

}  // namespace docpair
