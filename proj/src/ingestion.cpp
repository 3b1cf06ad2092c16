#include "docpair/ingestion.hpp"

#include "docpair/errors.hpp"
#include "docpair/text.hpp"

#include <algorithm>
#include <fnmatch.h>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

namespace fs = std::filesystem;

namespace docpair {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError(path, "read failed");
    return ss.str();
}

std::vector<RepoSource> load_repo_manifest(const fs::path& path) {
    const std::string doc = read_file(path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(doc);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("<repos>", std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_array()) throw ConfigError("<repos>", "manifest must be a JSON array");

    std::vector<RepoSource> repos;
    for (const auto& entry : j) {
        if (!entry.is_object()) throw ConfigError("<repos>", "each entry must be an object");
        auto get = [&](const char* key, bool required) -> std::string {
            if (!entry.contains(key)) {
                if (required) throw ConfigError(key, "missing in repo manifest entry");
                return {};
            }
            if (!entry[key].is_string()) throw ConfigError(key, "must be a string");
            return entry[key].get<std::string>();
        };
        RepoSource repo;
        repo.repo_name = get("repo_name", true);
        repo.root_path = get("root_path", true);
        repo.license_tag = get("license_tag", false);
        repo.domain_tag = get("domain_tag", false);
        if (repo.repo_name.empty()) throw ValidationError("repo_name must be non-empty");
        if (repo.root_path.is_relative()) repo.root_path = path.parent_path() / repo.root_path;
        repos.push_back(std::move(repo));
    }
    return repos;
}

namespace {

bool ignored(const fs::path& relative, const std::vector<std::string>& globs) {
    const std::string rel = relative.generic_string();
    for (const auto& glob : globs) {
        if (fnmatch(glob.c_str(), rel.c_str(), 0) == 0) return true;
        for (const auto& segment : relative)
            if (fnmatch(glob.c_str(), segment.string().c_str(), 0) == 0) return true;
    }
    return false;
}

}  // namespace

std::vector<SourceFileRef> discover_sources(const RepoSource& repo, const PipelineConfig& config) {
    std::error_code ec;
    if (!fs::is_directory(repo.root_path, ec)) throw IoError(repo.root_path, "repository root is not a directory");

    std::vector<SourceFileRef> files;
    fs::recursive_directory_iterator it(repo.root_path, fs::directory_options::none, ec);
    if (ec) throw IoError(repo.root_path, "cannot read directory: " + ec.message());

    for (const fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
        if (ec) throw IoError(it->path(), "cannot read directory: " + ec.message());
        const fs::path relative = it->path().lexically_relative(repo.root_path);
        if (ignored(relative, config.ignore_globs)) {
            if (it->is_directory(ec)) it.disable_recursion_pending();
            continue;
        }
        if (!it->is_regular_file(ec)) continue;
        const auto lang = detect_language(it->path());
        if (!lang) continue;

        SourceFileRef ref;
        ref.path = it->path();
        ref.relative_path = relative.generic_string();
        ref.language = *lang;
        ref.byte_size = it->file_size(ec);
        if (ec) throw IoError(it->path(), "cannot stat file");
        files.push_back(std::move(ref));
    }
    std::sort(files.begin(), files.end(),
              [](const SourceFileRef& a, const SourceFileRef& b) { return a.relative_path < b.relative_path; });
    for (auto& f : files) f.content_digest = text::sha256_hex(read_file(f.path));
    return files;
}

}  // namespace docpair
