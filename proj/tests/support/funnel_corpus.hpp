#pragma once

// Hand-constructed corpus with known per-function verdicts:
//   20 clean functions (12 Python, 4 Java, 4 TypeScript), 2 of them AI-styled,
//   10 copies of clean Python functions (5 comment-only, 5 with reordered statements),
//   20 functions that pass Stage 1 but score below the quality gate,
//   10 functions rejected by Stage 1.
// Expected funnel: (60, 50, 30, 20, 2, 20).

#include "docpair/assembly.hpp"
#include "test_support.hpp"

#include <array>
#include <string>

namespace docpair::testing {

inline constexpr FunnelCounts funnel_corpus_expected{60, 50, 30, 20, 2, 20};

namespace funnel_detail {

inline constexpr std::array<const char*, 20> clean_words{
    "amber", "birch", "cedar", "delta", "ember", "fjord", "grove", "harbor", "iris",  "jade",
    "kelp",  "lotus", "maple", "nectar", "onyx", "pearl", "quartz", "raven", "sage", "tundra",
};

inline constexpr std::array<const char*, 20> weak_words{
    "apple", "bison", "camel", "dingo", "eagle", "finch", "gecko", "heron", "ibis",  "jackal",
    "koala", "lemur", "moose", "newt",  "otter", "panda", "quail", "robin", "seal", "tapir",
};

inline std::string cap(std::string w) {
    w[0] = static_cast<char>(w[0] - 'a' + 'A');
    return w;
}

inline std::string python_clean(const std::string& w, int i, bool ai_styled, bool reorder, bool comment) {
    const std::string n = std::to_string(i);
    std::string doc = ai_styled ? "    \"\"\"This function takes two " + w + " counters and returns their total.\n"
                                : "    \"\"\"Combines two " + w + " counters into one total.\n";
    doc += "\n    Args:\n        first_" + w + ": leading " + w + " counter.\n        second_" + w + ": trailing " + w +
           " counter.\n\n    Returns:\n        The combined " + w + " total.\n";
    if (ai_styled) doc += "\n    Raises:\n        ValueError: when a counter is negative.\n";
    doc += "    \"\"\"\n";
    const std::string base = "    base_" + w + " = first_" + w + " * " + std::to_string(i + 2) + "\n";
    const std::string extra = "    extra_" + w + " = second_" + w + " + " + n + "\n";
    std::string body = reorder ? extra + base : base + extra;
    body += "    if base_" + w + " > second_" + w + ":\n        base_" + w + " -= second_" + w + "\n";
    if (comment) body += "    # keep the running total in one place\n";
    body += "    total_" + w + " = base_" + w + " + extra_" + w + "\n    return total_" + w + "\n";
    return "def combine_" + w + "_" + n + "(first_" + w + ": int, second_" + w + ": int) -> int:\n" + doc + body;
}

inline std::string python_weak(const std::string& w, int i) {
    const std::string n = std::to_string(i);
    return "def blend_" + w + "_" + n + "(first_" + w + ", second_" + w + "):\n"
           "    \"\"\"This is some work on the " + w + " values here.\"\"\"\n"
           "    base_" + w + " = first_" + w + " * " + std::to_string(i + 3) + "\n"
           "    if base_" + w + " > second_" + w + ":\n"
           "        base_" + w + " -= second_" + w + "\n"
           "    extra_" + w + " = second_" + w + " + " + n + "\n"
           "    total_" + w + " = base_" + w + " + extra_" + w + "\n"
           "    return total_" + w + "\n";
}

inline std::string java_clean(const std::string& w, int i) {
    const std::string W = cap(w), n = std::to_string(i);
    return "    /**\n"
           "     * Combines two " + w + " counters into one total.\n"
           "     *\n"
           "     * @param first" + W + " leading counter\n"
           "     * @param second" + W + " trailing counter\n"
           "     * @return the combined total\n"
           "     */\n"
           "    public int combine" + W + n + "(int first" + W + ", int second" + W + ") {\n"
           "        int base" + W + " = first" + W + " * " + std::to_string(i + 2) + ";\n"
           "        if (base" + W + " > second" + W + ") {\n"
           "            base" + W + " -= second" + W + ";\n"
           "        }\n"
           "        int extra" + W + " = second" + W + " + " + n + ";\n"
           "        return base" + W + " + extra" + W + ";\n"
           "    }\n\n";
}

inline std::string ts_clean(const std::string& w, int i) {
    const std::string W = cap(w), n = std::to_string(i);
    return "/**\n"
           " * Combines two " + w + " counters into one total.\n"
           " * @param first" + W + " leading counter\n"
           " * @param second" + W + " trailing counter\n"
           " * @returns the combined total\n"
           " */\n"
           "export function combine" + W + n + "(first" + W + ": number, second" + W + ": number): number {\n"
           "  let base" + W + " = first" + W + " * " + std::to_string(i + 2) + ";\n"
           "  if (base" + W + " > second" + W + ") {\n"
           "    base" + W + " -= second" + W + ";\n"
           "  }\n"
           "  const extra" + W + " = second" + W + " + " + n + ";\n"
           "  return base" + W + " + extra" + W + ";\n"
           "}\n\n";
}

}  // namespace funnel_detail

// Writes two repositories under `root` and a repos.json manifest naming them.
// Returns the manifest path.
inline std::filesystem::path write_funnel_corpus(const std::filesystem::path& root) {
    using namespace funnel_detail;
    std::string core, copies, weak, java, ts;
    for (int i = 0; i < 12; ++i) core += python_clean(clean_words[i], i, i == 3 || i == 7, false, false) + "\n\n";
    for (int i = 0; i < 5; ++i) copies += python_clean(clean_words[i], i, i == 3, false, true) + "\n\n";
    for (int i = 5; i < 10; ++i) copies += python_clean(clean_words[i], i, i == 7, true, false) + "\n\n";
    for (int i = 0; i < 20; ++i) weak += python_weak(weak_words[i], i) + "\n\n";
    for (int i = 12; i < 16; ++i) java += java_clean(clean_words[i], i);
    for (int i = 16; i < 20; ++i) ts += ts_clean(clean_words[i], i);

    const std::string good_doc = "    \"\"\"Formats the ledger rows for printing.\"\"\"\n";
    const std::string body5 =
        "    rows = list(entries)\n    width = max(len(r) for r in rows)\n    lines = [r.ljust(width) for r in rows]\n"
        "    return lines\n";
    std::string rejects;
    rejects += "def undocumented_a(entries):\n" + body5 + "\n\n";                            // missing_documentation
    rejects += "def undocumented_b(entries):\n    # just a comment\n" + body5 + "\n\n";    // missing_documentation
    rejects += "def terse_a(entries):\n    \"\"\"Pads rows.\"\"\"\n" + body5 + "\n\n";        // doc_too_short
    rejects += "def terse_b(entries):\n    \"\"\"Rows.\"\"\"\n" + body5 + "\n\n";             // doc_too_short
    rejects += "def tiny_a(entries):\n" + good_doc + "    return list(entries)\n\n\n";     // too_few_logical_lines
    rejects += "def tiny_b(entries):\n" + good_doc + "    rows = list(entries)\n    return rows\n\n\n";
    rejects += "def test_format_rows(entries):\n" + good_doc + body5 + "\n\n";              // is_test
    rejects += "def format_rows_test(entries):\n" + good_doc + body5 + "\n\n";              // is_test
    rejects += "def pad_pending(entries):\n    \"\"\"TODO: describe the padding rules.\"\"\"\n" + body5 + "\n\n";

    const auto alpha = root / "alpha";
    write_text(alpha / "core/combine.py", core);
    write_text(alpha / "core/weak.py", weak);
    write_text(alpha / "misc/copies.py", copies);
    write_text(alpha / "misc/rejects.py", rejects);
    write_text(alpha / "tests/helpers.py", "def assemble_report(entries):\n" + good_doc + body5);  // is_test by path
    write_text(alpha / "README.md", "not source\n");
    write_text(alpha / "node_modules/dep/index.js", "/** Ignored vendored code here. */\nfunction ignored(a) { return a; }\n");

    const auto beta = root / "beta";
    write_text(beta / "src/Combine.java", "package beta;\n\npublic class Combine {\n\n" + java + "}\n");
    write_text(beta / "web/combine.ts", ts);

    const auto manifest = root / "repos.json";
    write_text(manifest,
               R"([{"repo_name": "alpha", "root_path": "alpha", "license_tag": "MIT", "domain_tag": "utilities"},)"
               R"( {"repo_name": "beta", "root_path": "beta", "license_tag": "Apache-2.0", "domain_tag": "web"}])");
    return manifest;
}

}  // namespace docpair::testing
