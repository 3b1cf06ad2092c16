#include "docpair/dedup.hpp"
#include "docpair/errors.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

namespace docpair {
namespace {

FunctionRecord code_record(std::string code, Language lang = Language::python, int i = 0) {
    FunctionRecord r;
    r.id = "r" + std::to_string(i);
    r.language = lang;
    r.code = std::move(code);
    return r;
}

TokenSet tokens_of(const std::vector<std::string>& words) {
    std::string joined;
    for (const auto& w : words) joined += w + " ";
    return tokenize(joined);
}

// Python function whose body mentions every identifier once.
std::string function_over(const std::vector<std::string>& idents) {
    std::string code = "def compute(" + idents.front() + "):\n";
    for (std::size_t i = 1; i < idents.size(); ++i) code += "    " + idents[i] + " = " + idents[i - 1] + "\n";
    code += "    return " + idents.back() + "\n";
    return code;
}

std::vector<std::string> fresh_idents(std::mt19937_64& rng, std::size_t n, const std::string& prefix) {
    std::vector<std::string> out;
    std::uniform_int_distribution<int> letter(0, 25);
    for (std::size_t i = 0; i < n; ++i) {
        std::string s = prefix + std::to_string(i) + "_";
        for (int j = 0; j < 5; ++j) s += static_cast<char>('a' + letter(rng));
        out.push_back(s);
    }
    return out;
}

TEST(NormalizeCode, SpecExamples) {
    EXPECT_EQ(normalize_code("int  f() { // hi\n return 1; }", Language::cpp).text, "int f() { return 1; }");
    EXPECT_EQ(normalize_code("int f() { /* a */ return 1; }", Language::cpp).text,
              normalize_code("int f() {\n  // b\n  return 1;\n}", Language::cpp).text);
    EXPECT_EQ(normalize_code("const s = \"http://x\"; // c", Language::javascript).text, "const s = \"http://x\";");
}

TEST(NormalizeCode, NoCommentsNoWhitespaceRuns) {
    const auto n = normalize_code("def f(x):\n    \"\"\"Doc.\"\"\"\n    # note\n    return  x  # trailing\n", Language::python);
    EXPECT_EQ(n.text, "def f(x): return x");
    EXPECT_EQ(n.text.find("  "), std::string::npos);
    EXPECT_EQ(n.digest.size(), 64u);
    EXPECT_EQ(n.digest, normalize_code("def f(x):\n  return x", Language::python).digest);
}

TEST(NormalizeCode, Sha256OfText) {
    // sha256("abc")
    EXPECT_EQ(normalize_code("abc", Language::python).digest,
              "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Tokenize, LowercaseUniqueSorted) {
    const auto t = tokenize("Foo foo BAR_1 + bar_1 x9");
    EXPECT_EQ(t.tokens, (std::vector<std::string>{"bar_1", "foo", "x9"}));
    EXPECT_TRUE(tokenize("+ - ( )").empty());
}

TEST(ExactJaccard, SetArithmetic) {
    EXPECT_DOUBLE_EQ(exact_jaccard(tokens_of({"a", "b"}), tokens_of({"b", "c"})), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(exact_jaccard(tokens_of({}), tokens_of({})), 1.0);
    EXPECT_DOUBLE_EQ(exact_jaccard(tokens_of({"a"}), tokens_of({"b"})), 0.0);
}

TEST(ExactDedup, SpecExamples) {
    const std::vector<FunctionRecord> abA{code_record("x = 1", Language::python, 0),
                                          code_record("y = 2", Language::python, 1),
                                          code_record("x  =  1  # same", Language::python, 2)};
    const auto out = exact_dedup(abA);
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[0].id, "r0");
    EXPECT_EQ(out[1].id, "r1");

    const std::vector<FunctionRecord> distinct{code_record("a = 1"), code_record("b = 1"), code_record("c = 1")};
    EXPECT_EQ(exact_dedup(distinct).size(), 3u);
    EXPECT_TRUE(exact_dedup(std::vector<FunctionRecord>{}).empty());
}

std::vector<FunctionRecord> variant_corpus(std::size_t originals, std::size_t variants, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<FunctionRecord> corpus;
    for (std::size_t i = 0; i < originals; ++i)
        corpus.push_back(code_record("int f" + std::to_string(i) + "(int a) {\n  return a + " + std::to_string(i) + ";\n}",
                                     Language::cpp, static_cast<int>(i)));
    std::uniform_int_distribution<std::size_t> pick(0, originals - 1);
    for (std::size_t v = 0; v < variants; ++v) {
        const std::string src_id = "r" + std::to_string(pick(rng));
        const auto src_it = std::find_if(corpus.begin(), corpus.end(), [&](const auto& r) { return r.id == src_id; });
        const auto src = static_cast<std::size_t>(src_it - corpus.begin());
        std::string code = src_it->code;
        if (v % 2 == 0) code = "// variant " + std::to_string(v) + "\n" + code + " /* tail */";
        else code = "  " + code + "\n\n\t";
        for (std::size_t p; (p = code.find('\n')) != std::string::npos && v % 2 == 1 && v % 3 == 0;) code.replace(p, 1, "   ");
        // Insert after a random existing position so variants never precede their source.
        std::uniform_int_distribution<std::size_t> at(src + 1, corpus.size());
        corpus.insert(corpus.begin() + static_cast<std::ptrdiff_t>(at(rng)),
                      code_record(code, Language::cpp, static_cast<int>(originals + v)));
    }
    return corpus;
}

std::vector<std::string> brute_force_survivors(const std::vector<FunctionRecord>& corpus) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        bool dup = false;
        const std::string ni = normalize_code(corpus[i].code, corpus[i].language).text;
        for (std::size_t j = 0; j < i && !dup; ++j) dup = normalize_code(corpus[j].code, corpus[j].language).text == ni;
        if (!dup) ids.push_back(corpus[i].id);
    }
    return ids;
}

TEST(ExactDedup, HundredRecordsWithThirtyVariants) {
    const auto corpus = variant_corpus(70, 30, 3);
    ASSERT_EQ(corpus.size(), 100u);
    const auto out = exact_dedup(corpus);
    EXPECT_EQ(out.size(), 70u);
    std::vector<std::string> ids;
    for (const auto& r : out) ids.push_back(r.id);
    EXPECT_EQ(ids, brute_force_survivors(corpus));
}

TEST(ExactDedup, MatchesBruteForceOracleOnThousandRecords) {
    const auto corpus = variant_corpus(600, 400, 19);
    const auto outcome = exact_dedup_indices(corpus);
    std::vector<std::string> ids;
    for (std::size_t i : outcome.survivors) ids.push_back(corpus[i].id);
    EXPECT_EQ(ids, brute_force_survivors(corpus));
    for (const auto& rej : outcome.rejected) {
        EXPECT_LT(rej.kept_index, rej.index);
        EXPECT_EQ(rej.kind, DuplicateKind::exact);
        EXPECT_DOUBLE_EQ(rej.similarity, 1.0);
    }
}

TEST(MinHash, IdenticalSetsGiveIdenticalSignatures) {
    const auto seeds = derive_hash_seeds(42, 128);
    const auto a = minhash_signature(tokens_of({"alpha", "beta", "gamma"}), seeds);
    const auto b = minhash_signature(tokens_of({"gamma", "alpha", "beta", "beta"}), seeds);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.k(), 128u);
    EXPECT_DOUBLE_EQ(jaccard_estimate(a, b), 1.0);
}

TEST(MinHash, ComponentIsMinimumOfTokenHashes) {
    const auto seeds = derive_hash_seeds(7, 16);
    const auto tokens = tokens_of({"one", "two", "three"});
    const auto sig = minhash_signature(tokens, seeds);
    for (std::size_t j = 0; j < seeds.size(); ++j) {
        std::uint64_t m = ~0ull;
        for (const auto& t : tokens.tokens) m = std::min(m, token_hash(t, seeds[j]));
        EXPECT_EQ(sig.components[j], m);
    }
}

TEST(MinHash, SeedsAreDeterministicAndDistinct) {
    const auto a = derive_hash_seeds(42, 128);
    EXPECT_EQ(a, derive_hash_seeds(42, 128));
    EXPECT_NE(a, derive_hash_seeds(43, 128));
    EXPECT_EQ(std::set<std::uint64_t>(a.begin(), a.end()).size(), 128u);
}

TEST(MinHash, EmptySetIsDegenerate) {
    EXPECT_THROW(minhash_signature(TokenSet{}, derive_hash_seeds(1, 8)), DegenerateSample);
}

TEST(JaccardEstimate, Definition) {
    MinHashSignature a, b;
    a.components.assign(128, 1);
    b.components.assign(128, 2);
    EXPECT_DOUBLE_EQ(jaccard_estimate(a, b), 0.0);
    for (std::size_t i = 0; i < 64; ++i) b.components[i] = 1;
    EXPECT_DOUBLE_EQ(jaccard_estimate(a, b), 0.5);
    b.components.resize(64);
    EXPECT_THROW(jaccard_estimate(a, b), ContractViolation);
}

// Sets with |A u B| = 100 and |A n B| = round(100 J / 1) chosen so exact Jaccard is J.
std::pair<TokenSet, TokenSet> pair_with_jaccard(double j, std::mt19937_64& rng) {
    const int uni = 120;
    const int inter = static_cast<int>(j * uni + 0.5);
    auto idents = fresh_idents(rng, static_cast<std::size_t>(uni), "t");
    std::vector<std::string> a(idents.begin(), idents.begin() + inter), b = a;
    for (int i = inter; i < uni; ++i) ((i - inter) % 2 == 0 ? a : b).push_back(idents[static_cast<std::size_t>(i)]);
    return {tokens_of(a), tokens_of(b)};
}

TEST(MinHashStatistics, MeanEstimateTracksExactJaccard) {
    std::mt19937_64 rng(2024);
    for (double level : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        double sum = 0.0;
        int within = 0;
        const int trials = 200;
        for (int t = 0; t < trials; ++t) {
            const auto [a, b] = pair_with_jaccard(level, rng);
            ASSERT_NEAR(exact_jaccard(a, b), level, 1e-12);
            const auto seeds = derive_hash_seeds(rng(), 128);
            const double est = jaccard_estimate(minhash_signature(a, seeds), minhash_signature(b, seeds));
            sum += est;
            within += std::abs(est - level) <= 0.12 ? 1 : 0;
        }
        EXPECT_NEAR(sum / trials, level, 0.05) << level;
        EXPECT_GE(within, trials * 95 / 100) << level;
    }
}

TEST(MinHashStatistics, DisjointSetsEstimateNearZero) {
    std::mt19937_64 rng(5);
    int high = 0;
    for (int t = 0; t < 200; ++t) {
        const auto a = tokens_of(fresh_idents(rng, 50, "a"));
        const auto b = tokens_of(fresh_idents(rng, 50, "b"));
        const auto seeds = derive_hash_seeds(rng(), 128);
        if (jaccard_estimate(minhash_signature(a, seeds), minhash_signature(b, seeds)) > 0.1) ++high;
    }
    EXPECT_EQ(high, 0);
}

TEST(BandLayout, DividesKAndTracksTau) {
    const auto l = choose_band_layout(128, 0.8);
    EXPECT_EQ(l.bands * l.rows, 128u);
    EXPECT_EQ(l.bands, 8u);
    EXPECT_EQ(l.rows, 16u);
    for (std::size_t b = 1; b <= 128; ++b) {
        if (128 % b) continue;
        const BandLayout other{b, 128 / b};
        EXPECT_LE(std::abs(l.threshold() - 0.8), std::abs(other.threshold() - 0.8) + 1e-12);
    }
}

TEST(LshIndex, QueryReturnsEarliestVerifiedMatch) {
    const auto seeds = derive_hash_seeds(42, 128);
    std::mt19937_64 rng(9);
    const auto base = fresh_idents(rng, 40, "x");
    LshIndex index(128, 0.8);
    EXPECT_FALSE(index.query(minhash_signature(tokens_of(base), seeds)));
    index.insert(minhash_signature(tokens_of(fresh_idents(rng, 40, "y")), seeds));
    index.insert(minhash_signature(tokens_of(base), seeds));
    index.insert(minhash_signature(tokens_of(base), seeds));
    EXPECT_EQ(index.query(minhash_signature(tokens_of(base), seeds)), std::optional<std::size_t>(1));
}

TEST(NearDedup, RenamedIdentifierCloneCollapses) {
    std::mt19937_64 rng(77);
    const DedupConfig config;
    int checked = 0;
    for (int trial = 0; trial < 20; ++trial) {
        auto idents = fresh_idents(rng, 60, "v");
        auto renamed = idents;
        renamed[30] = "renamed_variable";
        const std::vector<FunctionRecord> pair{code_record(function_over(idents), Language::python, 0),
                                               code_record(function_over(renamed), Language::python, 1)};
        const double j = exact_jaccard(tokenize(normalize_code(pair[0].code, Language::python).text),
                                       tokenize(normalize_code(pair[1].code, Language::python).text));
        ASSERT_GE(j, 0.95);
        const auto out = near_dedup_indices(pair, config);
        EXPECT_EQ(out.survivors, std::vector<std::size_t>{0});
        ASSERT_EQ(out.rejected.size(), 1u);
        EXPECT_EQ(out.rejected[0].kind, DuplicateKind::near);
        EXPECT_EQ(out.rejected[0].kept_index, 0u);
        EXPECT_GE(out.rejected[0].similarity, config.tau_lsh);
        ++checked;
    }
    EXPECT_EQ(checked, 20);
}

TEST(NearDedup, LowSimilarityCorpusLosesNothing) {
    std::mt19937_64 rng(31);
    std::vector<FunctionRecord> corpus;
    const auto shared = fresh_idents(rng, 8, "s");
    for (int i = 0; i < 150; ++i) {
        auto idents = fresh_idents(rng, 30, "u" + std::to_string(i) + "_");
        idents.insert(idents.end(), shared.begin(), shared.begin() + 3);
        corpus.push_back(code_record(function_over(idents), Language::python, i));
    }
    std::vector<TokenSet> sets;
    for (const auto& r : corpus) sets.push_back(tokenize(normalize_code(r.code, r.language).text));
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = a + 1; b < sets.size(); ++b) ASSERT_LE(exact_jaccard(sets[a], sets[b]), 0.3);
    EXPECT_EQ(near_dedup_pass(corpus, DedupConfig{}).size(), corpus.size());
}

TEST(NearDedup, EmptyInputAndEmptyTokenSets) {
    EXPECT_TRUE(near_dedup_pass(std::vector<FunctionRecord>{}, DedupConfig{}).empty());
    const std::vector<FunctionRecord> blanks{code_record("# only\n", Language::python, 0),
                                             code_record("# comment\n", Language::python, 1)};
    EXPECT_EQ(near_dedup_pass(blanks, DedupConfig{}).size(), 2u);
}

TEST(NearDedup, LanguagesIndexedSeparatelyUnlessConfigured) {
    const std::string body = "x = alpha + beta + gamma + delta + epsilon";
    const std::vector<FunctionRecord> two{code_record(body, Language::python, 0),
                                          code_record(body + ";", Language::javascript, 1)};
    EXPECT_EQ(near_dedup_pass(two, DedupConfig{}).size(), 2u);
    DedupConfig cross;
    cross.cross_language = true;
    EXPECT_EQ(near_dedup_pass(two, cross).size(), 1u);
}

TEST(NearDedup, IdempotentAndDeterministic) {
    std::mt19937_64 rng(123);
    std::vector<FunctionRecord> corpus;
    for (int i = 0; i < 60; ++i) {
        auto idents = fresh_idents(rng, 25, "p" + std::to_string(i % 20) + "_");
        corpus.push_back(code_record(function_over(idents), Language::python, i));
        if (i % 4 == 0) {
            idents[3] = "changed";
            corpus.push_back(code_record(function_over(idents), Language::python, 1000 + i));
        }
    }
    const DedupConfig config;
    const auto once = near_dedup_pass(corpus, config);
    const auto again = near_dedup_pass(corpus, config);
    ASSERT_EQ(once.size(), again.size());
    for (std::size_t i = 0; i < once.size(); ++i) EXPECT_EQ(once[i].id, again[i].id);
    EXPECT_EQ(near_dedup_pass(once, config).size(), once.size());
    EXPECT_LT(once.size(), corpus.size());
}

TEST(Deduplicate, IndicesReferToOriginalInput) {
    const std::vector<FunctionRecord> corpus{code_record("a = one + two + three", Language::python, 0),
                                             code_record("a = one + two + three  # dup", Language::python, 1),
                                             code_record("b = four + five", Language::python, 2)};
    const auto out = deduplicate(corpus, DedupConfig{});
    EXPECT_EQ(out.survivors, (std::vector<std::size_t>{0, 2}));
    ASSERT_EQ(out.rejected.size(), 1u);
    EXPECT_EQ(out.rejected[0].index, 1u);
    EXPECT_EQ(out.rejected[0].kept_index, 0u);
}

}  // namespace
}  // namespace docpair
