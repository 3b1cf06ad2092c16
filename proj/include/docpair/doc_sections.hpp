#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace docpair {

enum class DocSection { description, parameters, returns, raises, examples, other };

// Structure recovered from delimiter-stripped documentation. Recognizes Javadoc/JSDoc/
// Doxygen tags (@param, \return, ...), Google-style headers (Args:, Returns:),
// NumPy-style underlined headers, Sphinx fields (:param x:) and doctest prompts.
struct DocStructure {
    std::string summary;                       // prose before the first section or tag
    std::vector<std::string> documented_params;  // unique, in order of appearance
    bool has_description = false;
    bool has_params = false;
    bool has_returns = false;
    bool has_raises = false;
    bool has_examples = false;
    // Section kinds in order of first appearance of each header/tag run.
    std::vector<DocSection> section_order;

    int canonical_section_count() const noexcept {
        return int(has_description) + int(has_params) + int(has_returns) + int(has_raises) +
               int(has_examples);
    }
};

DocStructure parse_doc(std::string_view documentation);

// First sentence of `summary` (up to the first '.', '!' or '?' followed by space or end).
std::string first_sentence(std::string_view summary);

}  // namespace docpair
