#pragma once

#include "docpair/config.hpp"
#include "docpair/extraction.hpp"
#include "docpair/language.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace docpair {

struct NormalizedCode {
    std::string text;    // comments removed, whitespace runs collapsed, trimmed
    std::string digest;  // SHA-256 of text, lowercase hex
};

// Comments are stripped per the language's syntax (string literals are left intact);
// for Python the leading docstring of the definition is dropped as well.
NormalizedCode normalize_code(std::string_view code, Language lang);

// Lowercased [a-z0-9_]+ tokens, multiplicity ignored. Kept sorted for determinism.
struct TokenSet {
    std::vector<std::string> tokens;

    bool empty() const noexcept { return tokens.empty(); }
    std::size_t size() const noexcept { return tokens.size(); }
};

TokenSet tokenize(std::string_view normalized_text);

// |A ∩ B| / |A ∪ B|; 1.0 when both are empty.
double exact_jaccard(const TokenSet& a, const TokenSet& b);

struct DegenerateSample : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// k per-component seeds derived from one master seed.
std::vector<std::uint64_t> derive_hash_seeds(std::uint64_t master_seed, std::size_t k);

// Component j hashes a token with seed j.
std::uint64_t token_hash(std::string_view token, std::uint64_t seed) noexcept;

struct MinHashSignature {
    std::vector<std::uint64_t> components;
    std::size_t k() const noexcept { return components.size(); }
    bool operator==(const MinHashSignature&) const = default;
};

// Throws DegenerateSample on an empty token set.
MinHashSignature minhash_signature(const TokenSet& tokens, std::span<const std::uint64_t> seeds);

// Fraction of equal components. Throws ContractViolation when lengths differ.
double jaccard_estimate(const MinHashSignature& a, const MinHashSignature& b);

struct BandLayout {
    std::size_t bands = 1;
    std::size_t rows = 1;
    // (1/b)^(1/r): similarity at which the collision probability curve is steepest.
    double threshold() const noexcept;
};

// Divisor pair b*r = k whose threshold is closest to tau.
BandLayout choose_band_layout(std::size_t k, double tau);

// Banded LSH buckets with signature verification. Queries return the earliest
// inserted entry whose signature similarity reaches tau.
class LshIndex {
public:
    LshIndex(std::size_t k, double tau);

    const BandLayout& layout() const noexcept { return layout_; }
    double tau() const noexcept { return tau_; }
    std::size_t size() const noexcept { return signatures_.size(); }

    // Index of the matching prior entry, if any.
    std::optional<std::size_t> query(const MinHashSignature& sig) const;
    std::size_t insert(MinHashSignature sig);

private:
    std::uint64_t band_digest(const MinHashSignature& sig, std::size_t band) const noexcept;

    BandLayout layout_;
    double tau_;
    std::vector<MinHashSignature> signatures_;
    std::vector<std::map<std::uint64_t, std::vector<std::size_t>>> buckets_;  // per band
};

enum class DuplicateKind { exact, near };

struct DuplicateRejection {
    std::size_t index;      // position in the input list
    std::size_t kept_index; // survivor it duplicates
    DuplicateKind kind;
    double similarity;      // 1.0 for exact duplicates
};

struct DedupOutcome {
    std::vector<std::size_t> survivors;  // input positions, ascending
    std::vector<DuplicateRejection> rejected;
};

// First occurrence of each normalized text survives.
DedupOutcome exact_dedup_indices(std::span<const FunctionRecord> records);
std::vector<FunctionRecord> exact_dedup(std::span<const FunctionRecord> records);

// Single sequential pass in input order: a record is discarded when a previously
// retained record (same language unless cross_language is set) verifies at >= tau_lsh.
// Records with an empty token set bypass the index and are kept.
DedupOutcome near_dedup_indices(std::span<const FunctionRecord> records, const DedupConfig& config);
std::vector<FunctionRecord> near_dedup_pass(std::span<const FunctionRecord> records, const DedupConfig& config);

// Exact then near-duplicate removal, with indices referring to the original input.
DedupOutcome deduplicate(std::span<const FunctionRecord> records, const DedupConfig& config);

}  // namespace docpair
