#pragma once

#include "docpair/ai_detect.hpp"
#include "docpair/config.hpp"
#include "docpair/extraction.hpp"
#include "docpair/quality.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace docpair {

inline constexpr std::string_view pipeline_version = "1.0.0";
inline constexpr int dataset_schema_version = 1;

enum class Split { train, validation, test };

std::string_view split_name(Split s) noexcept;

struct DatasetSample {
    FunctionRecord record;
    QualityAssessment quality;
    AIDetectionResult ai;
    Split split = Split::train;
};

// Per language: shuffle (seeded, after ordering by id) and cut by the ratios.
// Cell sizes are rounded so that every language total and every split total is an
// integer apportionment (largest remainder). Languages with fewer than three
// samples go entirely to train.
std::vector<Split> stratified_split(std::span<const DatasetSample> samples, const SplitConfig& split);

struct CorpusStats {
    std::size_t total = 0;
    double quality_mean = 0.0;
    double quality_median = 0.0;
    double quality_stddev = 0.0;  // population form
    double quality_min = 0.0;
    double quality_max = 0.0;
    double complexity_mean = 0.0;
    double complexity_median = 0.0;
    std::size_t annotated = 0;
    double annotation_rate = 0.0;
    std::size_t ai_flagged = 0;
    double ai_flag_rate = 0.0;
    std::map<Language, std::size_t> per_language;  // only languages present
    std::map<std::string, std::size_t> per_repository;

    double language_rate(Language lang) const noexcept;
};

// Medians use the lower middle element for even counts.
CorpusStats compute_stats(std::span<const DatasetSample> samples);

struct FunnelCounts {
    std::size_t extracted = 0;
    std::size_t after_stage1 = 0;
    std::size_t after_stage2 = 0;
    std::size_t after_stage3 = 0;
    std::size_t flagged_stage4 = 0;
    std::size_t final_count = 0;

    double retention_percent() const noexcept;
    bool operator==(const FunnelCounts&) const = default;
};

struct SplitSizes {
    std::size_t train = 0;
    std::size_t validation = 0;
    std::size_t test = 0;
};

struct DatasetManifest {
    nlohmann::ordered_json config;   // config_snapshot
    nlohmann::ordered_json dedup;    // k, tau_lsh, band layout, seeds
    nlohmann::ordered_json phrase_packs;
    FunnelCounts funnel;
    SplitSizes splits;
    CorpusStats stats;
};

nlohmann::ordered_json manifest_to_json(const DatasetManifest& manifest);

// One JSON object per line, fixed key order, sorted by id. Creates parent directories.
void write_dataset(std::span<const DatasetSample> samples, const std::filesystem::path& path);
void write_manifest(const DatasetManifest& manifest, const std::filesystem::path& path);

// Writes language_distribution.csv, quality_histogram.csv, quality_by_language.csv and
// funnel.csv into out_dir.
void emit_reports(const DatasetManifest& manifest, std::span<const DatasetSample> samples,
                  const std::filesystem::path& out_dir);

inline constexpr double histogram_bin_width = 0.25;

// Counts per [lo, lo + 0.25) bin over [0, 10]; 10.0 lands in the last bin.
std::vector<std::size_t> quality_histogram(std::span<const DatasetSample> samples);

}  // namespace docpair
