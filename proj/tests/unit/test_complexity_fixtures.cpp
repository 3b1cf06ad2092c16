#include "docpair/extraction.hpp"
#include "docpair/ingestion.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace docpair {
namespace {

struct FixtureCase {
    const char* file;
    Language language;
    std::size_t min_functions;
};

void PrintTo(const FixtureCase& c, std::ostream* os) { *os << c.file; }

class ComplexityFixture : public ::testing::TestWithParam<FixtureCase> {};

TEST_P(ComplexityFixture, MatchesHandCountedDecisionPoints) {
    const FixtureCase& c = GetParam();
    SourceFileRef ref;
    ref.path = testing::fixture_dir() / "complexity" / c.file;
    ref.relative_path = c.file;
    ref.language = c.language;
    const auto records = extract_file(ref, read_file(ref.path), "fixtures");
    ASSERT_GE(records.size(), c.min_functions);

    std::size_t labelled = 0;
    bool saw_straight_line = false;
    for (const auto& r : records) {
        const auto expected = testing::expected_complexity(r.documentation);
        ASSERT_TRUE(expected.has_value()) << r.name << " has no expect: label";
        ++labelled;
        EXPECT_EQ(r.complexity, *expected) << c.file << ":" << r.start_line << " " << r.name;
        if (*expected == 1) saw_straight_line = true;
    }
    EXPECT_GE(labelled, 20u);
    EXPECT_TRUE(saw_straight_line);
}

INSTANTIATE_TEST_SUITE_P(AllLanguages, ComplexityFixture,
                         ::testing::Values(FixtureCase{"complexity.py", Language::python, 20},
                                           FixtureCase{"Complexity.java", Language::java, 20},
                                           FixtureCase{"complexity.js", Language::javascript, 20},
                                           FixtureCase{"complexity.ts", Language::typescript, 20},
                                           FixtureCase{"complexity.cpp", Language::cpp, 20}),
                         [](const auto& info) { return std::string(language_name(info.param.language)); });

}  // namespace
}  // namespace docpair
