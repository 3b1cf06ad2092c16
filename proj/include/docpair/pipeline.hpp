#pragma once

#include "docpair/assembly.hpp"
#include "docpair/config.hpp"
#include "docpair/ingestion.hpp"
#include "docpair/record_json.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace docpair {

enum class Stage { extract, filter, score, dedup, aiflag, assemble };

std::string_view stage_name(Stage s) noexcept;
// Throws UsageError for unknown names.
Stage parse_stage(std::string_view name);

struct StageResult {
    std::vector<StreamRecord> records;
    std::vector<nlohmann::ordered_json> rejects;  // reject-log entries
};

// Stage bodies shared by the full run and single-stage mode.
StageResult extract_stage(const std::vector<RepoSource>& repos, const PipelineConfig& config);
StageResult filter_stage(std::vector<StreamRecord> input, const PipelineConfig& config);
StageResult score_stage(std::vector<StreamRecord> input, const PipelineConfig& config);
StageResult dedup_stage(std::vector<StreamRecord> input, const PipelineConfig& config);
StageResult aiflag_stage(std::vector<StreamRecord> input, const PipelineConfig& config);

// Splits, stats, dataset.jsonl, manifest.json and reports/ under out_dir.
DatasetManifest assemble_stage(std::vector<StreamRecord> input, const FunnelCounts& upstream,
                               const PipelineConfig& config, const std::filesystem::path& out_dir);

struct RunSummary {
    DatasetManifest manifest;
    std::vector<std::pair<std::string, double>> stage_seconds;
    std::vector<std::pair<std::string, std::size_t>> reject_counts;
};

// extract -> stage 1 -> stage 2 -> stage 3 -> stage 4 -> assemble. Reject logs go to
// out_dir/rejects/<stage>.jsonl and timings to out_dir/run_summary.json.
RunSummary run_pipeline(const PipelineConfig& config, const std::vector<RepoSource>& repos,
                        const std::filesystem::path& out_dir);
// An empty config path selects the defaults.
RunSummary run_pipeline(const std::filesystem::path& config_path, const std::filesystem::path& repo_manifest_path,
                        const std::filesystem::path& out_dir);

// Runs one stage over a JSON-lines stream. `extract` reads RepoSource objects; the
// others read stream records. `assemble` derives funnel counts from the reject logs
// already present in out_dir/rejects and writes outputs under out_dir. Returns the
// number of records written to `out`.
std::size_t run_stage(Stage stage, std::istream& in, std::ostream& out, const PipelineConfig& config,
                      const std::filesystem::path& out_dir);

// Funnel reconstructed from reject logs plus the final record count.
FunnelCounts funnel_from_reject_logs(const std::filesystem::path& out_dir, std::size_t final_count,
                                     std::size_t flagged);

std::filesystem::path reject_log_path(const std::filesystem::path& out_dir, Stage stage);

}  // namespace docpair
