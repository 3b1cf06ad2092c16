#pragma once

#include "docpair/extraction.hpp"
#include "docpair/quality_types.hpp"

namespace docpair {

struct QualityAssessment {
    QualityDimensions dimensions;
    QualityWeights weights;
    double score = 0.0;  // on [0, 10]
    bool passed = false;
};

QualityDimensions assess_dimensions(const FunctionRecord& record);

// 10 * sum(w_i q_i) / sum(w_i).
double combine_scores(const QualityDimensions& dims, const QualityWeights& weights);

// Inclusive: score >= min_score.
bool quality_gate(const QualityAssessment& assessment, double min_score) noexcept;

QualityAssessment assess_quality(const FunctionRecord& record, const QualityWeights& weights,
                                 double min_score);

// Individual dimension heuristics, exposed for tests.
namespace quality_detail {
double appropriate_complexity_score(int complexity) noexcept;
bool opens_with_action_word(std::string_view summary);
double commented_out_code_ratio(std::string_view code, Language lang);
}  // namespace quality_detail

}  // namespace docpair
