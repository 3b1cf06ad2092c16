#include "docpair/assembly.hpp"

#include "docpair/errors.hpp"
#include "docpair/record_json.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

namespace docpair {

namespace fs = std::filesystem;

namespace {

constexpr std::size_t split_count = 3;
constexpr std::size_t min_group_size = 3;
constexpr std::size_t histogram_bins = 40;

// Uniform integer in [0, bound) by rejection; the standard distributions are not
// portable across library implementations.
std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = gen();
    } while (x >= limit);
    return x % bound;
}

std::uint64_t group_seed(std::uint64_t seed, Language lang) {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(lang) + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Largest-remainder apportionment of n over the ratios.
std::array<std::size_t, split_count> apportion(std::size_t n, const std::array<double, split_count>& ratios) {
    std::array<std::size_t, split_count> out{};
    std::array<double, split_count> frac{};
    std::size_t assigned = 0;
    for (std::size_t s = 0; s < split_count; ++s) {
        const double exact = static_cast<double>(n) * ratios[s];
        out[s] = static_cast<std::size_t>(std::floor(exact));
        frac[s] = exact - std::floor(exact);
        assigned += out[s];
    }
    std::array<std::size_t, split_count> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return frac[a] > frac[b]; });
    for (std::size_t i = 0; assigned < n; i = (i + 1) % split_count, ++assigned) ++out[order[i]];
    return out;
}

double mean_of(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double lower_median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    return v[(v.size() - 1) / 2];
}

std::string fixed(double v, int digits) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

std::ofstream open_output(const fs::path& path) {
    std::error_code ec;
    if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError(path.parent_path(), "cannot create directory");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path, "cannot open for writing");
    return out;
}

void finish(std::ofstream& out, const fs::path& path) {
    out.flush();
    if (!out) throw IoError(path, "write failed");
}

double rate(std::size_t count, std::size_t total) {
    return total == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(total);
}

}  // namespace

std::string_view split_name(Split s) noexcept {
    switch (s) {
        case Split::train: return "train";
        case Split::validation: return "validation";
        case Split::test: return "test";
    }
    return "train";
}

std::vector<Split> stratified_split(std::span<const DatasetSample> samples, const SplitConfig& split) {
    const std::array<double, split_count> ratios{split.train, split.validation, split.test};
    std::vector<Split> out(samples.size(), Split::train);

    std::map<Language, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < samples.size(); ++i) groups[samples[i].record.language].push_back(i);

    std::vector<Language> eligible;
    std::size_t eligible_total = 0;
    for (auto& [lang, members] : groups) {
        if (members.size() < min_group_size) {
            std::cerr << "warning: language " << language_name(lang) << " has " << members.size()
                      << " sample(s); assigning all to train\n";
            continue;
        }
        eligible.push_back(lang);
        eligible_total += members.size();
    }
    if (eligible.empty()) return out;

    // Cell sizes: start from floors, then hand out remaining units by descending
    // fractional part so that row sums (languages) and column sums (splits) both hit
    // their integer targets.
    const auto column_target = apportion(eligible_total, ratios);
    const std::size_t rows = eligible.size();
    std::vector<std::array<std::size_t, split_count>> cells(rows);
    std::vector<std::size_t> row_left(rows);
    std::array<std::size_t, split_count> col_left = column_target;
    struct Unit {
        double frac;
        std::size_t row;
        std::size_t col;
    };
    std::vector<Unit> units;
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t n = groups[eligible[r]].size();
        std::size_t used = 0;
        for (std::size_t s = 0; s < split_count; ++s) {
            const double exact = static_cast<double>(n) * ratios[s];
            cells[r][s] = static_cast<std::size_t>(std::floor(exact));
            used += cells[r][s];
            col_left[s] -= std::min(col_left[s], cells[r][s]);
            units.push_back({exact - std::floor(exact), r, s});
        }
        row_left[r] = n - used;
    }
    std::stable_sort(units.begin(), units.end(), [](const Unit& a, const Unit& b) { return a.frac > b.frac; });
    for (const Unit& u : units) {
        if (row_left[u.row] == 0 || col_left[u.col] == 0) continue;
        ++cells[u.row][u.col];
        --row_left[u.row];
        --col_left[u.col];
    }
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t s = 0; s < split_count && row_left[r] > 0; ++s) {
            const std::size_t take = std::min(row_left[r], col_left[s]);
            cells[r][s] += take;
            row_left[r] -= take;
            col_left[s] -= take;
        }
        cells[r][0] += row_left[r];  // only reachable with inconsistent ratios
        row_left[r] = 0;
    }

    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<std::size_t> members = groups[eligible[r]];
        std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
            return samples[a].record.id < samples[b].record.id;
        });
        std::mt19937_64 gen(group_seed(split.seed, eligible[r]));
        for (std::size_t i = members.size(); i > 1; --i) std::swap(members[i - 1], members[bounded(gen, i)]);

        std::size_t pos = 0;
        for (std::size_t s = 0; s < split_count; ++s)
            for (std::size_t c = 0; c < cells[r][s]; ++c) out[members[pos++]] = static_cast<Split>(s);
    }
    return out;
}

double CorpusStats::language_rate(Language lang) const noexcept {
    const auto it = per_language.find(lang);
    return it == per_language.end() ? 0.0 : rate(it->second, total);
}

CorpusStats compute_stats(std::span<const DatasetSample> samples) {
    CorpusStats st;
    st.total = samples.size();
    if (samples.empty()) return st;

    std::vector<double> scores;
    std::vector<double> complexities;
    for (const auto& s : samples) {
        scores.push_back(s.quality.score);
        complexities.push_back(static_cast<double>(s.record.complexity));
        if (s.record.has_type_annotations) ++st.annotated;
        if (s.ai.flagged) ++st.ai_flagged;
        ++st.per_language[s.record.language];
        ++st.per_repository[s.record.repo_name];
    }
    st.quality_mean = mean_of(scores);
    st.quality_median = lower_median(scores);
    double sq = 0.0;
    for (double v : scores) sq += (v - st.quality_mean) * (v - st.quality_mean);
    st.quality_stddev = std::sqrt(sq / static_cast<double>(scores.size()));
    st.quality_min = *std::min_element(scores.begin(), scores.end());
    st.quality_max = *std::max_element(scores.begin(), scores.end());
    st.complexity_mean = mean_of(complexities);
    st.complexity_median = lower_median(complexities);
    st.annotation_rate = rate(st.annotated, st.total);
    st.ai_flag_rate = rate(st.ai_flagged, st.total);
    return st;
}

double FunnelCounts::retention_percent() const noexcept {
    return extracted == 0 ? 0.0 : 100.0 * static_cast<double>(final_count) / static_cast<double>(extracted);
}

nlohmann::ordered_json manifest_to_json(const DatasetManifest& m) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["schema_version"] = dataset_schema_version;
    j["pipeline_version"] = pipeline_version;
    j["config"] = m.config;
    j["dedup"] = m.dedup;
    j["phrase_packs"] = m.phrase_packs;
    j["funnel"] = {
        {"extracted", m.funnel.extracted},
        {"after_stage1", m.funnel.after_stage1},
        {"after_stage2", m.funnel.after_stage2},
        {"after_stage3", m.funnel.after_stage3},
        {"flagged_stage4", m.funnel.flagged_stage4},
        {"final", m.funnel.final_count},
        {"retention_percent", m.funnel.retention_percent()},
    };
    j["splits"] = {{"train", m.splits.train}, {"validation", m.splits.validation}, {"test", m.splits.test}};

    const CorpusStats& s = m.stats;
    ordered_json languages = ordered_json::object();
    for (const auto& [lang, count] : s.per_language)
        languages[std::string(language_name(lang))] = {{"count", count}, {"rate", s.language_rate(lang)}};
    ordered_json repos = ordered_json::object();
    for (const auto& [name, count] : s.per_repository) repos[name] = count;
    j["stats"] = {
        {"total", s.total},
        {"quality",
         {{"mean", s.quality_mean},
          {"median", s.quality_median},
          {"stddev", s.quality_stddev},
          {"min", s.quality_min},
          {"max", s.quality_max}}},
        {"complexity", {{"mean", s.complexity_mean}, {"median", s.complexity_median}}},
        {"type_annotations", {{"count", s.annotated}, {"rate", s.annotation_rate}}},
        {"ai_flagged", {{"count", s.ai_flagged}, {"rate", s.ai_flag_rate}}},
        {"languages", languages},
        {"repositories", repos},
    };
    return j;
}

void write_dataset(std::span<const DatasetSample> samples, const fs::path& path) {
    std::vector<const DatasetSample*> ordered;
    ordered.reserve(samples.size());
    for (const auto& s : samples) ordered.push_back(&s);
    std::sort(ordered.begin(), ordered.end(),
              [](const DatasetSample* a, const DatasetSample* b) { return a->record.id < b->record.id; });

    std::ofstream out = open_output(path);
    for (const DatasetSample* s : ordered)
        out << sample_to_json(*s).dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
    finish(out, path);
}

void write_manifest(const DatasetManifest& manifest, const fs::path& path) {
    std::ofstream out = open_output(path);
    out << manifest_to_json(manifest).dump(2, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
    finish(out, path);
}

std::vector<std::size_t> quality_histogram(std::span<const DatasetSample> samples) {
    std::vector<std::size_t> bins(histogram_bins, 0);
    for (const auto& s : samples) {
        const double clamped = std::clamp(s.quality.score, 0.0, 10.0);
        const auto bin = std::min<std::size_t>(static_cast<std::size_t>(clamped / histogram_bin_width),
                                               histogram_bins - 1);
        ++bins[bin];
    }
    return bins;
}

void emit_reports(const DatasetManifest& manifest, std::span<const DatasetSample> samples, const fs::path& out_dir) {
    const CorpusStats& st = manifest.stats;
    {
        const fs::path p = out_dir / "language_distribution.csv";
        std::ofstream out = open_output(p);
        out << "language,count,percent\n";
        for (const auto& [lang, count] : st.per_language)
            out << language_name(lang) << ',' << count << ',' << fixed(100.0 * st.language_rate(lang), 2) << '\n';
        finish(out, p);
    }
    {
        const fs::path p = out_dir / "quality_histogram.csv";
        std::ofstream out = open_output(p);
        out << "bin_start,bin_end,count\n";
        const auto bins = quality_histogram(samples);
        for (std::size_t b = 0; b < bins.size(); ++b)
            out << fixed(b * histogram_bin_width, 2) << ',' << fixed((b + 1) * histogram_bin_width, 2) << ','
                << bins[b] << '\n';
        finish(out, p);
    }
    {
        const fs::path p = out_dir / "quality_by_language.csv";
        std::ofstream out = open_output(p);
        out << "language,count,mean,median,min,max\n";
        std::map<Language, std::vector<double>> by_lang;
        for (const auto& s : samples) by_lang[s.record.language].push_back(s.quality.score);
        for (const auto& [lang, scores] : by_lang) {
            out << language_name(lang) << ',' << scores.size() << ',' << fixed(mean_of(scores), 4) << ','
                << fixed(lower_median(scores), 4) << ',' << fixed(*std::min_element(scores.begin(), scores.end()), 4)
                << ',' << fixed(*std::max_element(scores.begin(), scores.end()), 4) << '\n';
        }
        finish(out, p);
    }
    {
        const fs::path p = out_dir / "funnel.csv";
        std::ofstream out = open_output(p);
        const FunnelCounts& f = manifest.funnel;
        out << "stage,count,percent_of_extracted\n";
        const std::pair<const char*, std::size_t> rows[] = {
            {"extracted", f.extracted},       {"after_stage1", f.after_stage1}, {"after_stage2", f.after_stage2},
            {"after_stage3", f.after_stage3}, {"flagged_stage4", f.flagged_stage4}, {"final", f.final_count},
        };
        for (const auto& [name, count] : rows)
            out << name << ',' << count << ',' << fixed(100.0 * rate(count, f.extracted), 2) << '\n';
        finish(out, p);
    }
}

}  // namespace docpair
