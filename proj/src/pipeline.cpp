#include "docpair/pipeline.hpp"

#include "docpair/ai_detect.hpp"
#include "docpair/basic_filter.hpp"
#include "docpair/dedup.hpp"
#include "docpair/errors.hpp"
#include "docpair/parallel.hpp"
#include "docpair/quality.hpp"
#include "docpair/syntax.hpp"
#include "docpair/text.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <istream>
#include <ostream>
#include <set>

namespace docpair {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr Stage all_stages[] = {Stage::extract, Stage::filter, Stage::score,
                                Stage::dedup,   Stage::aiflag, Stage::assemble};

std::string dump_line(const ordered_json& j) {
    return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

void write_jsonl(const fs::path& path, const std::vector<ordered_json>& lines) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError(path.parent_path(), "cannot create directory");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path, "cannot open for writing");
    for (const auto& l : lines) out << dump_line(l) << '\n';
    if (!out.flush()) throw IoError(path, "write failed");
}

std::size_t count_lines(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return 0;
    std::size_t n = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++n;
    return n;
}

ordered_json dedup_snapshot(const DedupConfig& c) {
    const BandLayout layout = choose_band_layout(c.num_hashes, c.tau_lsh);
    return {
        {"num_hashes", c.num_hashes},
        {"tau_lsh", c.tau_lsh},
        {"bands", layout.bands},
        {"rows", layout.rows},
        {"seed", c.seed},
        {"cross_language", c.cross_language},
        {"hash_seeds", derive_hash_seeds(c.seed, c.num_hashes)},
    };
}

ordered_json packs_snapshot(const PhrasePacks& p) {
    auto one = [](const PhrasePack& pack) {
        return ordered_json{{"name", pack.name}, {"digest", pack.digest}, {"phrases", pack.phrases.size()}};
    };
    return {{"gpt_style", one(p.gpt_style)}, {"generic", one(p.generic)}};
}

std::vector<StreamRecord> read_records(std::istream& in, const PipelineConfig& config) {
    std::vector<StreamRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (text::trim(line).empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ValidationError("input line " + std::to_string(line_no) + ": " + e.what());
        }
        records.push_back(stream_record_from_json(j, config.quality.weights));
    }
    return records;
}

std::vector<RepoSource> read_repo_sources(std::istream& in) {
    std::vector<RepoSource> repos;
    std::string line;
    while (std::getline(in, line)) {
        if (text::trim(line).empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ValidationError(std::string("repo source line: ") + e.what());
        }
        if (!j.is_object() || !j.contains("repo_name") || !j.contains("root_path"))
            throw ValidationError("repo source needs repo_name and root_path");
        RepoSource r;
        r.repo_name = j["repo_name"].get<std::string>();
        r.root_path = j["root_path"].get<std::string>();
        r.license_tag = j.value("license_tag", "");
        r.domain_tag = j.value("domain_tag", "");
        if (r.repo_name.empty()) throw ValidationError("repo_name must be non-empty");
        repos.push_back(std::move(r));
    }
    return repos;
}

std::size_t flagged_count(const std::vector<StreamRecord>& records) {
    std::size_t n = 0;
    for (const auto& r : records) n += r.ai && r.ai->flagged;
    return n;
}

}  // namespace

std::string_view stage_name(Stage s) noexcept {
    switch (s) {
        case Stage::extract: return "extract";
        case Stage::filter: return "filter";
        case Stage::score: return "score";
        case Stage::dedup: return "dedup";
        case Stage::aiflag: return "aiflag";
        case Stage::assemble: return "assemble";
    }
    return "extract";
}

Stage parse_stage(std::string_view name) {
    for (Stage s : all_stages)
        if (stage_name(s) == name) return s;
    throw UsageError("unknown stage '" + std::string(name) +
                     "' (expected extract, filter, score, dedup, aiflag or assemble)");
}

fs::path reject_log_path(const fs::path& out_dir, Stage stage) {
    return out_dir / "rejects" / (std::string(stage_name(stage)) + ".jsonl");
}

StageResult extract_stage(const std::vector<RepoSource>& repos, const PipelineConfig& config) {
    struct Job {
        const RepoSource* repo;
        SourceFileRef file;
    };
    std::vector<Job> jobs;
    for (const auto& repo : repos)
        for (auto& f : discover_sources(repo, config)) jobs.push_back({&repo, std::move(f)});

    struct Slot {
        std::vector<FunctionRecord> records;
        std::optional<std::string> failure;
    };
    std::vector<Slot> slots(jobs.size());
    parallel_for(jobs.size(), config.workers, [&](std::size_t i) {
        try {
            const std::string contents = read_file(jobs[i].file.path);
            slots[i].records = extract_file(jobs[i].file, contents, jobs[i].repo->repo_name);
        } catch (const ParseFailure& e) {
            slots[i].failure = std::string("parse_failure: ") + e.what();
        } catch (const IoError& e) {
            slots[i].failure = std::string("io_error: ") + e.what();
        }
    });

    StageResult result;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (slots[i].failure) {
            std::cerr << "warning: skipped " << jobs[i].file.path.string() << ": " << *slots[i].failure << '\n';
            result.rejects.push_back({{"repo", jobs[i].repo->repo_name},
                                      {"path", jobs[i].file.relative_path},
                                      {"stage", "extract"},
                                      {"reason", *slots[i].failure}});
            continue;
        }
        for (auto& rec : slots[i].records) {
            // Same name on the same line (e.g. overloads in one-liners) needs a suffix.
            if (!seen.insert(rec.id).second) {
                const std::string base = rec.id;
                for (int n = 2;; ++n) {
                    rec.id = base + "#" + std::to_string(n);
                    if (seen.insert(rec.id).second) break;
                }
            }
            result.records.push_back({std::move(rec), std::nullopt, std::nullopt});
        }
    }
    return result;
}

StageResult filter_stage(std::vector<StreamRecord> input, const PipelineConfig& config) {
    StageResult result;
    for (auto& r : input) {
        const FilterVerdict v = apply_basic_filters(r.record, config.stage1);
        if (v.passed()) {
            result.records.push_back(std::move(r));
        } else {
            result.rejects.push_back({{"id", r.record.id}, {"stage", "filter"}, {"reason", filter_reason_name(v.reason)}});
        }
    }
    return result;
}

StageResult score_stage(std::vector<StreamRecord> input, const PipelineConfig& config) {
    parallel_for(input.size(), config.workers, [&](std::size_t i) {
        input[i].quality = assess_quality(input[i].record, config.quality.weights, config.quality.min_quality_score);
    });
    StageResult result;
    for (auto& r : input) {
        if (r.quality->passed) {
            result.records.push_back(std::move(r));
        } else {
            result.rejects.push_back({{"id", r.record.id},
                                      {"stage", "score"},
                                      {"reason", "quality_below_threshold"},
                                      {"quality_score", r.quality->score}});
        }
    }
    return result;
}

StageResult dedup_stage(std::vector<StreamRecord> input, const PipelineConfig& config) {
    std::vector<FunctionRecord> records;
    records.reserve(input.size());
    for (const auto& r : input) records.push_back(r.record);
    const DedupOutcome outcome = deduplicate(records, config.dedup);

    StageResult result;
    for (std::size_t i : outcome.survivors) result.records.push_back(std::move(input[i]));
    for (const auto& rej : outcome.rejected) {
        result.rejects.push_back({{"id", records[rej.index].id},
                                  {"stage", "dedup"},
                                  {"reason", rej.kind == DuplicateKind::exact ? "exact_duplicate" : "near_duplicate"},
                                  {"duplicate_of", records[rej.kept_index].id},
                                  {"similarity", rej.similarity}});
    }
    return result;
}

StageResult aiflag_stage(std::vector<StreamRecord> input, const PipelineConfig& config) {
    const PhrasePacks packs = load_phrase_packs(config.ai);
    parallel_for(input.size(), config.workers,
                 [&](std::size_t i) { input[i].ai = ai_likelihood(input[i].record.documentation, config.ai, packs); });
    return {std::move(input), {}};
}

DatasetManifest assemble_stage(std::vector<StreamRecord> input, const FunnelCounts& upstream,
                               const PipelineConfig& config, const fs::path& out_dir) {
    std::vector<DatasetSample> samples;
    samples.reserve(input.size());
    for (auto& r : input) {
        if (!r.quality || !r.ai)
            throw ValidationError("record '" + r.record.id + "' reached assembly without quality or AI fields");
        samples.push_back({std::move(r.record), *r.quality, std::move(*r.ai), Split::train});
    }
    std::sort(samples.begin(), samples.end(),
              [](const DatasetSample& a, const DatasetSample& b) { return a.record.id < b.record.id; });

    const auto splits = stratified_split(samples, config.split);
    DatasetManifest m;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        samples[i].split = splits[i];
        switch (splits[i]) {
            case Split::train: ++m.splits.train; break;
            case Split::validation: ++m.splits.validation; break;
            case Split::test: ++m.splits.test; break;
        }
    }
    m.config = config_snapshot(config);
    m.dedup = dedup_snapshot(config.dedup);
    m.phrase_packs = packs_snapshot(load_phrase_packs(config.ai));
    m.funnel = upstream;
    m.funnel.final_count = samples.size();
    m.funnel.flagged_stage4 = 0;
    for (const auto& s : samples) m.funnel.flagged_stage4 += s.ai.flagged;
    m.stats = compute_stats(samples);

    write_dataset(samples, out_dir / "dataset.jsonl");
    write_manifest(m, out_dir / "manifest.json");
    emit_reports(m, samples, out_dir / "reports");
    return m;
}

RunSummary run_pipeline(const PipelineConfig& config, const std::vector<RepoSource>& repos, const fs::path& out_dir) {
    using clock = std::chrono::steady_clock;
    RunSummary summary;
    FunnelCounts funnel;

    auto timed = [&](Stage stage, auto&& body) {
        const auto start = clock::now();
        auto result = body();
        summary.stage_seconds.emplace_back(std::string(stage_name(stage)),
                                           std::chrono::duration<double>(clock::now() - start).count());
        return result;
    };
    auto log = [&](Stage stage, const StageResult& r) {
        write_jsonl(reject_log_path(out_dir, stage), r.rejects);
        summary.reject_counts.emplace_back(std::string(stage_name(stage)), r.rejects.size());
    };

    StageResult r = timed(Stage::extract, [&] { return extract_stage(repos, config); });
    log(Stage::extract, r);
    funnel.extracted = r.records.size();

    r = timed(Stage::filter, [&] { return filter_stage(std::move(r.records), config); });
    log(Stage::filter, r);
    funnel.after_stage1 = r.records.size();

    r = timed(Stage::score, [&] { return score_stage(std::move(r.records), config); });
    log(Stage::score, r);
    funnel.after_stage2 = r.records.size();

    r = timed(Stage::dedup, [&] { return dedup_stage(std::move(r.records), config); });
    log(Stage::dedup, r);
    funnel.after_stage3 = r.records.size();

    r = timed(Stage::aiflag, [&] { return aiflag_stage(std::move(r.records), config); });
    log(Stage::aiflag, r);

    summary.manifest =
        timed(Stage::assemble, [&] { return assemble_stage(std::move(r.records), funnel, config, out_dir); });

    ordered_json js;
    ordered_json timings = ordered_json::object();
    for (const auto& [name, secs] : summary.stage_seconds) timings[name] = secs;
    ordered_json rejects = ordered_json::object();
    for (const auto& [name, n] : summary.reject_counts) rejects[name] = n;
    js["stage_seconds"] = timings;
    js["reject_counts"] = rejects;
    js["funnel"] = manifest_to_json(summary.manifest)["funnel"];
    std::ofstream out(out_dir / "run_summary.json", std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(out_dir / "run_summary.json", "cannot open for writing");
    out << js.dump(2) << '\n';
    return summary;
}

RunSummary run_pipeline(const fs::path& config_path, const fs::path& repo_manifest_path, const fs::path& out_dir) {
    PipelineConfig config = config_path.empty() ? PipelineConfig{} : load_config(config_path);
    apply_env_overrides(config);
    return run_pipeline(config, load_repo_manifest(repo_manifest_path), out_dir);
}

FunnelCounts funnel_from_reject_logs(const fs::path& out_dir, std::size_t final_count, std::size_t flagged) {
    FunnelCounts f;
    f.final_count = final_count;
    f.flagged_stage4 = flagged;
    f.after_stage3 = final_count;
    f.after_stage2 = f.after_stage3 + count_lines(reject_log_path(out_dir, Stage::dedup));
    f.after_stage1 = f.after_stage2 + count_lines(reject_log_path(out_dir, Stage::score));
    f.extracted = f.after_stage1 + count_lines(reject_log_path(out_dir, Stage::filter));
    return f;
}

std::size_t run_stage(Stage stage, std::istream& in, std::ostream& out, const PipelineConfig& config,
                      const fs::path& out_dir) {
    StageResult result;
    switch (stage) {
        case Stage::extract: result = extract_stage(read_repo_sources(in), config); break;
        case Stage::filter: result = filter_stage(read_records(in, config), config); break;
        case Stage::score: result = score_stage(read_records(in, config), config); break;
        case Stage::dedup: result = dedup_stage(read_records(in, config), config); break;
        case Stage::aiflag: result = aiflag_stage(read_records(in, config), config); break;
        case Stage::assemble: {
            auto records = read_records(in, config);
            const FunnelCounts upstream = funnel_from_reject_logs(out_dir, records.size(), flagged_count(records));
            const DatasetManifest m = assemble_stage(std::move(records), upstream, config, out_dir);
            return m.funnel.final_count;
        }
    }
    write_jsonl(reject_log_path(out_dir, stage), result.rejects);
    for (const auto& r : result.records) out << dump_line(to_json(r)) << '\n';
    out.flush();
    return result.records.size();
}

}  // namespace docpair
