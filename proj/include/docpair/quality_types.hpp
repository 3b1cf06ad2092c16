#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace docpair {

inline constexpr std::size_t quality_dimension_count = 8;

// Dimension order used by QualityDimensions::values() and QualityWeights::values().
inline constexpr std::array<std::string_view, quality_dimension_count> quality_dimension_names{
    "completeness",          "param_coverage", "return_coverage",        "type_annotations",
    "clarity",               "structural_consistency", "appropriate_complexity", "code_quality",
};

// Per-dimension scores, each on [0, 1].
struct QualityDimensions {
    double completeness = 0.0;
    double param_coverage = 0.0;
    double return_coverage = 0.0;
    double type_annotations = 0.0;
    double clarity = 0.0;
    double structural_consistency = 0.0;
    double appropriate_complexity = 0.0;
    double code_quality = 0.0;

    std::array<double, quality_dimension_count> values() const noexcept {
        return {completeness, param_coverage,         return_coverage,        type_annotations,
                clarity,      structural_consistency, appropriate_complexity, code_quality};
    }
    static QualityDimensions from_values(const std::array<double, quality_dimension_count>& v) noexcept {
        return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
    }
};

// Strictly positive weight per dimension. Defaults favor the documentation-content dimensions.
struct QualityWeights {
    double completeness = 0.20;
    double param_coverage = 0.15;
    double return_coverage = 0.15;
    double type_annotations = 0.10;
    double clarity = 0.15;
    double structural_consistency = 0.10;
    double appropriate_complexity = 0.05;
    double code_quality = 0.10;

    std::array<double, quality_dimension_count> values() const noexcept {
        return {completeness, param_coverage,         return_coverage,        type_annotations,
                clarity,      structural_consistency, appropriate_complexity, code_quality};
    }
    static QualityWeights from_values(const std::array<double, quality_dimension_count>& v) noexcept {
        return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
    }
};

}  // namespace docpair
