#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

namespace docpair {

// Exit codes used by the command-line tool.
enum class ExitCode : int {
    ok = 0,
    usage = 1,
    io = 2,
    validation = 3,
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    IoError(const std::filesystem::path& path, const std::string& what)
        : std::runtime_error(what + ": " + path.string()), path_(path) {}

    const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
};

// Malformed configuration document or a key with the wrong type.
struct ConfigError : std::runtime_error {
    ConfigError(std::string key, const std::string& what)
        : std::runtime_error("config key '" + key + "': " + what), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

// Well-formed input violating an invariant (ratios, weights, thresholds, record fields).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition (e.g. signatures of different length).
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace docpair
