#pragma once

#include "docpair/config.hpp"
#include "docpair/language.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace docpair {

// One local repository checkout to mine.
struct RepoSource {
    std::string repo_name;
    std::filesystem::path root_path;
    std::string license_tag;
    std::string domain_tag;
};

struct SourceFileRef {
    std::filesystem::path path;           // absolute or as given under the repo root
    std::string relative_path;            // '/'-separated, relative to the repo root
    Language language = Language::python;
    std::uintmax_t byte_size = 0;
    std::string content_digest;           // SHA-256, lowercase hex
};

// Reads a JSON array of {repo_name, root_path, license_tag, domain_tag}.
// Relative root paths are resolved against the manifest's directory.
std::vector<RepoSource> load_repo_manifest(const std::filesystem::path& path);

// Supported files under repo.root_path in lexicographic relative-path order.
// Any path segment matching one of config.ignore_globs prunes that subtree.
std::vector<SourceFileRef> discover_sources(const RepoSource& repo, const PipelineConfig& config);

std::string read_file(const std::filesystem::path& path);

}  // namespace docpair
