#include "docpair/basic_filter.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace docpair {
namespace {

using testing::make_record;

const Stage1Config defaults{};

std::string doc_of_length(std::size_t n) {
    std::string s = "Computes values.";
    while (s.size() < n) s += 'x';
    s.resize(n);
    return s;
}

FilterReason verdict(const FunctionRecord& r) { return apply_basic_filters(r, defaults).reason; }

TEST(BasicFilter, SpecExamples) {
    EXPECT_EQ(verdict(make_record("compute", doc_of_length(19))), FilterReason::doc_too_short);
    EXPECT_EQ(verdict(make_record("compute", doc_of_length(40), 51)), FilterReason::complexity_too_high);
    const FilterVerdict ok = apply_basic_filters(make_record("compute", doc_of_length(20), 2, 5), defaults);
    EXPECT_TRUE(ok.passed());
    EXPECT_EQ(ok.reason, FilterReason::ok);
}

TEST(BasicFilter, MissingDocumentationComesFirst) {
    EXPECT_EQ(verdict(make_record("test_x", "", 99, 0)), FilterReason::missing_documentation);
    EXPECT_EQ(verdict(make_record("compute", " \n\t ")), FilterReason::missing_documentation);
}

TEST(BasicFilter, BoundaryMatrix) {
    struct Case {
        std::size_t doc;
        int complexity;
        int lines;
        FilterReason expected;
    };
    const Case cases[] = {
        {19, 2, 5, FilterReason::doc_too_short},   {20, 2, 5, FilterReason::ok},
        {10000, 2, 5, FilterReason::ok},           {10001, 2, 5, FilterReason::doc_too_long},
        {40, 50, 5, FilterReason::ok},             {40, 51, 5, FilterReason::complexity_too_high},
        {40, 1, 5, FilterReason::ok},              {40, 2, 4, FilterReason::too_few_logical_lines},
        {40, 2, 5, FilterReason::ok},
    };
    for (const auto& c : cases) {
        const auto r = make_record("compute", doc_of_length(c.doc), c.complexity, c.lines);
        EXPECT_EQ(verdict(r), c.expected) << c.doc << "/" << c.complexity << "/" << c.lines;
    }
}

TEST(BasicFilter, LengthCountsCodePointsNotBytes) {
    std::string doc;
    for (int i = 0; i < 20; ++i) doc += "\xC3\xA9";  // 20 x U+00E9, 40 bytes
    EXPECT_EQ(verdict(make_record("compute", doc)), FilterReason::ok);
    doc.resize(doc.size() - 2);
    EXPECT_EQ(verdict(make_record("compute", doc)), FilterReason::doc_too_short);
}

TEST(BasicFilter, FirstViolationWinsInFixedOrder) {
    EXPECT_EQ(verdict(make_record("test_get", doc_of_length(5), 60, 1)), FilterReason::doc_too_short);
    EXPECT_EQ(verdict(make_record("test_get", doc_of_length(30), 60, 1)), FilterReason::complexity_too_high);
    EXPECT_EQ(verdict(make_record("test_get", doc_of_length(30), 2, 1)), FilterReason::too_few_logical_lines);
    EXPECT_EQ(verdict(make_record("test_get", "TODO " + doc_of_length(30), 2, 5)), FilterReason::is_test);
    Stage1Config loose;
    loose.min_logical_lines = 1;
    EXPECT_EQ(apply_basic_filters(make_record("getName", "TODO " + doc_of_length(30), 2, 1), loose).reason,
              FilterReason::is_trivial_accessor);
    EXPECT_EQ(verdict(make_record("compute", "TODO " + doc_of_length(30))), FilterReason::has_placeholder);
}

TEST(IsTestFunction, SpecExamples) {
    EXPECT_TRUE(is_test_function(make_record("test_parse", "d"), defaults));
    EXPECT_FALSE(is_test_function(make_record("attestation", "d"), defaults));
    EXPECT_TRUE(is_test_function(make_record("helper", "d", 2, 5, "src/tests/util.py"), defaults));
}

TEST(IsTestFunction, NameBoundaries) {
    for (const char* yes : {"test", "testParse", "TestParser", "parse_test", "TEST_CASE", "Test", "test1", "parserTest"})
        EXPECT_TRUE(is_test_name(yes, defaults)) << yes;
    for (const char* no : {"latest", "contest", "testify", "attestation", "protester", "greatest_value", "detest"})
        EXPECT_FALSE(is_test_name(no, defaults)) << no;
}

TEST(IsTestFunction, PathSegments) {
    auto at = [](const char* path) { return is_test_function(make_record("helper", "d", 2, 5, path), defaults); };
    EXPECT_TRUE(at("test/a.py"));
    EXPECT_TRUE(at("pkg/__tests__/a.js"));
    EXPECT_TRUE(at("pkg/test_util.py"));
    EXPECT_TRUE(at("pkg/util_test.go.py"));
    EXPECT_TRUE(at("src/Parser.test.ts"));
    EXPECT_FALSE(at("src/latest/contest.py"));
    EXPECT_FALSE(at("src/attestation.py"));
}

TEST(TrivialAccessor, SpecExamples) {
    EXPECT_TRUE(is_trivial_accessor(make_record("getName", "d", 1, 1), defaults));
    EXPECT_FALSE(is_trivial_accessor(make_record("getShortestPath", "d", 1, 40), defaults));
    EXPECT_FALSE(is_trivial_accessor(make_record("hash_block", "d", 1, 2), defaults));
}

TEST(TrivialAccessor, BoundaryAndCase) {
    EXPECT_TRUE(is_trivial_accessor(make_record("get_name", "d", 1, 3), defaults));
    EXPECT_FALSE(is_trivial_accessor(make_record("get_name", "d", 1, 4), defaults));
    EXPECT_TRUE(is_trivial_accessor(make_record("GetValue", "d", 1, 1), defaults));
    EXPECT_TRUE(is_trivial_accessor(make_record("_is_ready", "d", 1, 1), defaults));
    EXPECT_TRUE(is_trivial_accessor(make_record("get", "d", 1, 1), defaults));
    EXPECT_FALSE(is_trivial_accessor(make_record("settle", "d", 1, 1), defaults));
    EXPECT_FALSE(is_trivial_accessor(make_record("island", "d", 1, 1), defaults));
    EXPECT_FALSE(is_trivial_accessor(make_record("getter", "d", 1, 1), defaults));
}

TEST(Placeholder, SpecExamples) {
    EXPECT_TRUE(has_placeholder_text("TODO: document this", defaults));
    EXPECT_FALSE(has_placeholder_text("Computes the total order", defaults));
    EXPECT_TRUE(has_placeholder_text("see FIXME above", defaults));
}

TEST(Placeholder, WholeTokenCaseSensitive) {
    EXPECT_TRUE(has_placeholder_text("Broken (XXX).", defaults));
    EXPECT_FALSE(has_placeholder_text("todo list handling", defaults));
    EXPECT_FALSE(has_placeholder_text("Parses TODOS and FIXMEs", defaults));
    EXPECT_FALSE(has_placeholder_text("XXXL sizes", defaults));
}

TEST(BasicFilterProperties, PureAndMonotoneInMinDocChars) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(0, 60), cx(1, 60), lines(0, 10);
    for (int i = 0; i < 500; ++i) {
        const auto r = make_record("compute", doc_of_length(static_cast<std::size_t>(len(rng))), cx(rng), lines(rng));
        const auto first = apply_basic_filters(r, defaults);
        EXPECT_EQ(first.reason, apply_basic_filters(r, defaults).reason);
        Stage1Config looser = defaults;
        looser.min_doc_chars = 10;
        if (first.passed()) EXPECT_TRUE(apply_basic_filters(r, looser).passed());
    }
}

TEST(FilterReasonNames, AreSnakeCase) {
    EXPECT_EQ(filter_reason_name(FilterReason::doc_too_short), "doc_too_short");
    EXPECT_EQ(filter_reason_name(FilterReason::is_trivial_accessor), "is_trivial_accessor");
    EXPECT_EQ(filter_reason_name(FilterReason::ok), "ok");
}

}  // namespace
}  // namespace docpair
