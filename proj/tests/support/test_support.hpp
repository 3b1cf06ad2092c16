#pragma once

#include "docpair/extraction.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace docpair::testing {

inline std::filesystem::path fixture_dir() { return DOCPAIR_FIXTURE_DIR; }

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    TempDir() {
        std::string tmpl = (std::filesystem::temp_directory_path() / "docpair-test-XXXXXX").string();
        if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
        path_ = tmpl;
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::filesystem::path& path() const noexcept { return path_; }
    std::filesystem::path operator/(std::string_view rel) const { return path_ / rel; }

private:
    std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << content;
}

inline std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Hand-labelled fixtures carry "expect: N" in their documentation.
inline std::optional<int> expected_complexity(std::string_view doc) {
    const auto pos = doc.find("expect:");
    if (pos == std::string_view::npos) return std::nullopt;
    return std::atoi(std::string(doc.substr(pos + 7)).c_str());
}

inline FunctionRecord make_record(std::string name, std::string documentation, int complexity = 2,
                                  int logical_lines = 5, std::string path = "src/module.py") {
    FunctionRecord r;
    r.repo_name = "repo";
    r.path = std::move(path);
    r.language = Language::python;
    r.name = std::move(name);
    r.documentation = std::move(documentation);
    r.complexity = complexity;
    r.logical_lines = logical_lines;
    r.start_line = 1;
    r.end_line = logical_lines > 0 ? logical_lines : 1;
    r.id = make_record_id(r.repo_name, r.path, r.start_line, r.name);
    return r;
}

}  // namespace docpair::testing
