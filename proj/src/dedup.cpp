#include "docpair/dedup.hpp"

#include "docpair/errors.hpp"
#include "docpair/lexing.hpp"
#include "docpair/text.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <unordered_map>

namespace docpair {

namespace {

constexpr std::uint64_t fnv_offset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t fnv_prime = 0x100000001b3ULL;

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = fnv_offset) noexcept {
    for (unsigned char c : s) {
        h ^= c;
        h *= fnv_prime;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

bool is_string_prefix_char(char c) {
    return c == 'r' || c == 'R' || c == 'u' || c == 'U' || c == 'b' || c == 'B' || c == 'f' || c == 'F';
}

// Index of the segment holding the definition's docstring, if the code opens with one.
std::optional<std::size_t> python_docstring_segment(const std::vector<lexing::Segment>& segs) {
    std::string header;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const auto& s = segs[i];
        if (s.kind == lexing::SegmentKind::comment) continue;
        if (s.kind == lexing::SegmentKind::code) {
            header.append(s.text);
            continue;
        }
        // First string literal: it is the docstring when the header just ended with ':'.
        std::string_view h = text::trim_right(header);
        while (!h.empty() && is_string_prefix_char(h.back())) h.remove_suffix(1);
        h = text::trim_right(h);
        if (!h.ends_with(':') || header.find("def") == std::string::npos) return std::nullopt;
        // Statement position requires a line break between the ':' and the literal.
        if (std::string_view(header).substr(h.size()).find('\n') == std::string_view::npos) return std::nullopt;
        return i;
    }
    return std::nullopt;
}

}  // namespace

NormalizedCode normalize_code(std::string_view code, Language lang) {
    const auto segs = lexing::segment_source(code, lang);
    std::optional<std::size_t> docstring;
    if (lang == Language::python) docstring = python_docstring_segment(segs);

    std::string kept;
    kept.reserve(code.size());
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (segs[i].kind == lexing::SegmentKind::comment || (docstring && *docstring == i)) {
            kept += ' ';
            continue;
        }
        if (docstring && *docstring == i + 1 && segs[i].kind == lexing::SegmentKind::code) {
            // drop the docstring's r/u/b prefix as well
            std::string_view t = segs[i].text;
            while (!t.empty() && is_string_prefix_char(t.back())) t.remove_suffix(1);
            kept.append(t);
            continue;
        }
        kept.append(segs[i].text);
    }
    NormalizedCode n;
    n.text = text::collapse_whitespace(kept);
    n.digest = text::sha256_hex(n.text);
    return n;
}

TokenSet tokenize(std::string_view normalized_text) {
    std::set<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) tokens.insert(std::move(current));
        current.clear();
    };
    for (char c : normalized_text) {
        if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_') current += c;
        else if (c >= 'A' && c <= 'Z') current += static_cast<char>(c - 'A' + 'a');
        else flush();
    }
    flush();
    return TokenSet{{tokens.begin(), tokens.end()}};
}

double exact_jaccard(const TokenSet& a, const TokenSet& b) {
    if (a.empty() && b.empty()) return 1.0;
    std::vector<std::string> inter;
    std::set_intersection(a.tokens.begin(), a.tokens.end(), b.tokens.begin(), b.tokens.end(),
                          std::back_inserter(inter));
    const std::size_t uni = a.size() + b.size() - inter.size();
    return static_cast<double>(inter.size()) / static_cast<double>(uni);
}

std::vector<std::uint64_t> derive_hash_seeds(std::uint64_t master_seed, std::size_t k) {
    std::mt19937_64 gen(master_seed);
    std::vector<std::uint64_t> seeds(k);
    for (auto& s : seeds) s = gen();
    return seeds;
}

std::uint64_t token_hash(std::string_view token, std::uint64_t seed) noexcept {
    return splitmix64(fnv1a(token) ^ seed);
}

MinHashSignature minhash_signature(const TokenSet& tokens, std::span<const std::uint64_t> seeds) {
    if (tokens.empty()) throw DegenerateSample("empty token set");
    MinHashSignature sig;
    sig.components.assign(seeds.size(), std::numeric_limits<std::uint64_t>::max());
    for (const auto& t : tokens.tokens) {
        const std::uint64_t base = fnv1a(t);
        for (std::size_t j = 0; j < seeds.size(); ++j)
            sig.components[j] = std::min(sig.components[j], splitmix64(base ^ seeds[j]));
    }
    return sig;
}

double jaccard_estimate(const MinHashSignature& a, const MinHashSignature& b) {
    if (a.k() != b.k()) throw ContractViolation("signature lengths differ");
    if (a.k() == 0) throw ContractViolation("empty signatures");
    std::size_t equal = 0;
    for (std::size_t j = 0; j < a.k(); ++j) equal += a.components[j] == b.components[j];
    return static_cast<double>(equal) / static_cast<double>(a.k());
}

double BandLayout::threshold() const noexcept {
    return std::pow(1.0 / static_cast<double>(bands), 1.0 / static_cast<double>(rows));
}

BandLayout choose_band_layout(std::size_t k, double tau) {
    if (k == 0) throw ContractViolation("k must be positive");
    BandLayout best{k, 1};
    double best_gap = std::numeric_limits<double>::infinity();
    for (std::size_t b = 1; b <= k; ++b) {
        if (k % b != 0) continue;
        const BandLayout cand{b, k / b};
        const double gap = std::abs(cand.threshold() - tau);
        if (gap < best_gap) {
            best = cand;
            best_gap = gap;
        }
    }
    return best;
}

LshIndex::LshIndex(std::size_t k, double tau) : layout_(choose_band_layout(k, tau)), tau_(tau) {
    buckets_.resize(layout_.bands);
}

std::uint64_t LshIndex::band_digest(const MinHashSignature& sig, std::size_t band) const noexcept {
    std::uint64_t h = fnv_offset;
    for (std::size_t r = 0; r < layout_.rows; ++r) h = splitmix64(h ^ sig.components[band * layout_.rows + r]);
    return h;
}

std::optional<std::size_t> LshIndex::query(const MinHashSignature& sig) const {
    if (sig.k() != layout_.bands * layout_.rows) throw ContractViolation("signature length does not match index");
    std::set<std::size_t> candidates;
    for (std::size_t b = 0; b < layout_.bands; ++b) {
        const auto it = buckets_[b].find(band_digest(sig, b));
        if (it != buckets_[b].end()) candidates.insert(it->second.begin(), it->second.end());
    }
    for (std::size_t c : candidates)
        if (jaccard_estimate(sig, signatures_[c]) >= tau_) return c;
    return std::nullopt;
}

std::size_t LshIndex::insert(MinHashSignature sig) {
    if (sig.k() != layout_.bands * layout_.rows) throw ContractViolation("signature length does not match index");
    const std::size_t id = signatures_.size();
    for (std::size_t b = 0; b < layout_.bands; ++b) buckets_[b][band_digest(sig, b)].push_back(id);
    signatures_.push_back(std::move(sig));
    return id;
}

DedupOutcome exact_dedup_indices(std::span<const FunctionRecord> records) {
    DedupOutcome out;
    std::unordered_map<std::string, std::size_t> first;
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto [it, inserted] = first.try_emplace(normalize_code(records[i].code, records[i].language).text, i);
        if (inserted) out.survivors.push_back(i);
        else out.rejected.push_back({i, it->second, DuplicateKind::exact, 1.0});
    }
    return out;
}

std::vector<FunctionRecord> exact_dedup(std::span<const FunctionRecord> records) {
    std::vector<FunctionRecord> out;
    for (std::size_t i : exact_dedup_indices(records).survivors) out.push_back(records[i]);
    return out;
}

DedupOutcome near_dedup_indices(std::span<const FunctionRecord> records, const DedupConfig& config) {
    const auto seeds = derive_hash_seeds(config.seed, config.num_hashes);
    struct Partition {
        LshIndex index;
        std::vector<std::size_t> members;  // index entry -> input position
    };
    std::map<int, Partition> partitions;

    DedupOutcome out;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const TokenSet tokens = tokenize(normalize_code(records[i].code, records[i].language).text);
        if (tokens.empty()) {
            out.survivors.push_back(i);
            continue;
        }
        const MinHashSignature sig = minhash_signature(tokens, seeds);
        const int key = config.cross_language ? -1 : static_cast<int>(records[i].language);
        auto it = partitions.find(key);
        if (it == partitions.end())
            it = partitions.emplace(key, Partition{LshIndex(config.num_hashes, config.tau_lsh), {}}).first;
        Partition& part = it->second;
        if (auto hit = part.index.query(sig)) {
            const std::size_t kept = part.members[*hit];
            out.rejected.push_back({i, kept, DuplicateKind::near, 0.0});
            // similarity recomputed against the kept signature for the audit trail
            const TokenSet kept_tokens = tokenize(normalize_code(records[kept].code, records[kept].language).text);
            out.rejected.back().similarity = jaccard_estimate(sig, minhash_signature(kept_tokens, seeds));
            continue;
        }
        part.index.insert(sig);
        part.members.push_back(i);
        out.survivors.push_back(i);
    }
    return out;
}

std::vector<FunctionRecord> near_dedup_pass(std::span<const FunctionRecord> records, const DedupConfig& config) {
    std::vector<FunctionRecord> out;
    for (std::size_t i : near_dedup_indices(records, config).survivors) out.push_back(records[i]);
    return out;
}

DedupOutcome deduplicate(std::span<const FunctionRecord> records, const DedupConfig& config) {
    DedupOutcome exact = exact_dedup_indices(records);
    std::vector<FunctionRecord> stage;
    stage.reserve(exact.survivors.size());
    for (std::size_t i : exact.survivors) stage.push_back(records[i]);

    const DedupOutcome near = near_dedup_indices(stage, config);
    DedupOutcome out;
    out.rejected = std::move(exact.rejected);
    for (std::size_t s : near.survivors) out.survivors.push_back(exact.survivors[s]);
    for (const auto& r : near.rejected)
        out.rejected.push_back({exact.survivors[r.index], exact.survivors[r.kept_index], r.kind, r.similarity});
    std::sort(out.rejected.begin(), out.rejected.end(),
              [](const DuplicateRejection& a, const DuplicateRejection& b) { return a.index < b.index; });
    return out;
}

}  // namespace docpair
