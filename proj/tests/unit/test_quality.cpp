#include "docpair/quality.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

namespace docpair {
namespace {

using testing::make_record;

QualityDimensions uniform_dims(double v) { return QualityDimensions::from_values({v, v, v, v, v, v, v, v}); }

QualityWeights uniform_weights() { return QualityWeights::from_values({1, 1, 1, 1, 1, 1, 1, 1}); }

TEST(CombineScores, SpecExamples) {
    EXPECT_DOUBLE_EQ(combine_scores(uniform_dims(1.0), QualityWeights{}), 10.0);
    EXPECT_DOUBLE_EQ(combine_scores(uniform_dims(0.0), QualityWeights{}), 0.0);
    EXPECT_DOUBLE_EQ(combine_scores(QualityDimensions::from_values({1, 1, 1, 1, 0, 0, 0, 0}), uniform_weights()), 5.0);
}

TEST(CombineScores, DefaultWeightsSumToOne) {
    const auto w = QualityWeights{}.values();
    EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 1.0, 1e-12);
}

TEST(CombineScores, PropertiesOnRandomInputs) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0), weight(0.01, 5.0), scale(0.001, 1000.0);
    for (int i = 0; i < 500; ++i) {
        std::array<double, 8> q{}, w{};
        for (auto& v : q) v = unit(rng);
        for (auto& v : w) v = weight(rng);
        const auto dims = QualityDimensions::from_values(q);
        const auto weights = QualityWeights::from_values(w);
        const double score = combine_scores(dims, weights);
        EXPECT_GE(score, 0.0);
        EXPECT_LE(score, 10.0);

        std::array<double, 8> scaled = w;
        const double c = scale(rng);
        for (auto& v : scaled) v *= c;
        EXPECT_NEAR(combine_scores(dims, QualityWeights::from_values(scaled)), score, 1e-9);

        const std::size_t k = static_cast<std::size_t>(i) % 8;
        std::array<double, 8> raised = q;
        raised[k] = std::min(1.0, raised[k] + unit(rng));
        EXPECT_GE(combine_scores(QualityDimensions::from_values(raised), weights), score - 1e-12);

        const double mean = std::accumulate(q.begin(), q.end(), 0.0) / 8.0;
        EXPECT_NEAR(combine_scores(dims, uniform_weights()), 10.0 * mean, 1e-9);

        // Consistent permutation of dims and weights leaves the score unchanged.
        std::array<double, 8> pq{}, pw{};
        for (std::size_t j = 0; j < 8; ++j) {
            pq[j] = q[(j + 3) % 8];
            pw[j] = w[(j + 3) % 8];
        }
        EXPECT_NEAR(combine_scores(QualityDimensions::from_values(pq), QualityWeights::from_values(pw)), score, 1e-9);
    }
}

TEST(QualityGate, InclusiveBoundary) {
    QualityAssessment a;
    a.score = 6.0;
    EXPECT_TRUE(quality_gate(a, 6.0));
    a.score = 5.999;
    EXPECT_FALSE(quality_gate(a, 6.0));
    a.score = 9.68;
    EXPECT_TRUE(quality_gate(a, 6.0));
}

TEST(AssessDimensions, FullyCoveredFunction) {
    auto r = make_record("scale_values",
                         "Scales every value by a factor.\n\nArgs:\n    values: numbers to scale.\n    factor: multiplier.\n\n"
                         "Returns:\n    The scaled list.");
    r.parameters = {"values", "factor"};
    r.returns_value = true;
    r.has_type_annotations = true;
    const auto d = assess_dimensions(r);
    EXPECT_DOUBLE_EQ(d.param_coverage, 1.0);
    EXPECT_DOUBLE_EQ(d.return_coverage, 1.0);
    EXPECT_DOUBLE_EQ(d.type_annotations, 1.0);
    EXPECT_DOUBLE_EQ(d.completeness, 1.0);
    EXPECT_DOUBLE_EQ(d.structural_consistency, 1.0);
    EXPECT_DOUBLE_EQ(d.clarity, 1.0);
}

TEST(AssessDimensions, HalfOfParametersDocumented) {
    auto r = make_record("combine", "Combines inputs into one value.\n\n@param a first input\n@param b second input");
    r.parameters = {"a", "b", "c", "d"};
    EXPECT_DOUBLE_EQ(assess_dimensions(r).param_coverage, 0.5);
}

TEST(AssessDimensions, VoidFunctionWithoutReturnsSection) {
    auto r = make_record("flush_buffer", "Writes pending bytes to the underlying stream.");
    r.returns_value = false;
    EXPECT_DOUBLE_EQ(assess_dimensions(r).return_coverage, 1.0);
    r.returns_value = true;
    EXPECT_DOUBLE_EQ(assess_dimensions(r).return_coverage, 0.0);
}

TEST(AssessDimensions, ZeroParametersGiveFullCoverage) {
    const auto d = assess_dimensions(make_record("refresh_cache", "Rebuilds the cache from disk."));
    EXPECT_DOUBLE_EQ(d.param_coverage, 1.0);
    EXPECT_DOUBLE_EQ(d.structural_consistency, 1.0);
}

TEST(AssessDimensions, PhantomParametersPenalizedProportionally) {
    auto r = make_record("merge", "Merges two maps.\n\n:param left: base map\n:param right: overrides\n:param extra: gone\n:param old: gone");
    r.parameters = {"left", "right"};
    const auto d = assess_dimensions(r);
    EXPECT_DOUBLE_EQ(d.structural_consistency, 0.5);
    EXPECT_DOUBLE_EQ(d.param_coverage, 1.0);
}

TEST(AssessDimensions, CompletenessCountsApplicableParts) {
    auto r = make_record("parse_header", "Parses the header block.");
    r.parameters = {"raw"};
    r.returns_value = true;
    // Summary only; params and return missing.
    EXPECT_NEAR(assess_dimensions(r).completeness, 1.0 / 3.0, 1e-12);
}

TEST(AssessDimensions, ClarityComponents) {
    EXPECT_NEAR(assess_dimensions(make_record("compute", "This does stuff.")).clarity, 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(assess_dimensions(make_record("compute", "Computes.")).clarity, 1.0 / 3.0, 1e-12);
}

TEST(AssessDimensions, EveryDimensionInUnitInterval) {
    auto r = make_record("f", "x");
    r.parameters = {"a", "b"};
    r.returns_value = true;
    r.complexity = 80;
    r.code = "def f(a, b):\n    # return a + b\n    # x = a;\n    pass";
    for (double v : assess_dimensions(r).values()) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
    }
}

TEST(AppropriateComplexity, PiecewiseLinear) {
    using quality_detail::appropriate_complexity_score;
    EXPECT_DOUBLE_EQ(appropriate_complexity_score(1), 0.2);
    EXPECT_DOUBLE_EQ(appropriate_complexity_score(2), 1.0);
    EXPECT_DOUBLE_EQ(appropriate_complexity_score(10), 1.0);
    EXPECT_DOUBLE_EQ(appropriate_complexity_score(30), 0.6);
    EXPECT_DOUBLE_EQ(appropriate_complexity_score(50), 0.2);
    EXPECT_DOUBLE_EQ(appropriate_complexity_score(70), 0.2);
}

TEST(CodeQuality, ComponentsAverage) {
    auto r = make_record("ab", "Swaps two values in place.");
    r.parameters = {"x", "value"};
    r.code = "def ab(x, value):\n    return value, x";
    EXPECT_NEAR(assess_dimensions(r).code_quality, (0.0 + 0.5 + 1.0) / 3.0, 1e-12);
}

TEST(CommentedOutCode, RatioByLine) {
    using quality_detail::commented_out_code_ratio;
    EXPECT_DOUBLE_EQ(commented_out_code_ratio("int f() {\n  return 1;\n}", Language::cpp), 0.0);
    EXPECT_DOUBLE_EQ(commented_out_code_ratio("def f():\n    # x = compute()\n    # return x\n    pass", Language::python),
                     0.5);
    EXPECT_DOUBLE_EQ(commented_out_code_ratio("def f():\n    # explains the idea\n    pass", Language::python), 0.0);
    EXPECT_DOUBLE_EQ(commented_out_code_ratio("s = '# y = 1;'", Language::python), 0.0);
}

TEST(OpeningWord, ActionWords) {
    EXPECT_TRUE(quality_detail::opens_with_action_word("Returns the sum."));
    EXPECT_TRUE(quality_detail::opens_with_action_word("Compute totals."));
    EXPECT_FALSE(quality_detail::opens_with_action_word("This function adds."));
    EXPECT_FALSE(quality_detail::opens_with_action_word("The sum."));
    EXPECT_FALSE(quality_detail::opens_with_action_word(""));
}

TEST(AssessQuality, ScoreMatchesWeightedMeanAndGate) {
    auto r = make_record("scale_values", "Scales every value.\n\n@param values input\n@return scaled values");
    r.parameters = {"values"};
    r.returns_value = true;
    const QualityWeights w;
    const auto a = assess_quality(r, w, 6.0);
    EXPECT_NEAR(a.score, combine_scores(a.dimensions, w), 1e-12);
    EXPECT_EQ(a.passed, a.score >= 6.0);
}

}  // namespace
}  // namespace docpair
