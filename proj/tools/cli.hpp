#pragma once

#include "virg/classify.hpp"
#include "virg/session.hpp"

#include "json.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace virg::cli {

using nlohmann::json;

enum ExitCode : int { ok = 0, usage = 1, validation = 2, computation = 3 };

inline constexpr int kSchemaVersion = 1;

// Command-line overrides applied on top of the config file.
struct Overrides {
    std::optional<int> level_cap;
    std::optional<int> box_radius;
    std::optional<std::uint64_t> seed;
};

// Every violation in the config for the given command; empty when valid.
std::vector<std::string> validate(const json& config, const std::string& command);

// Config with the overrides written in (window.L, window.N, seed).
json effective_config(json config, const Overrides& overrides);

// Builders from a validated config. Throw ParseError / GroupError / DomainError.
Session make_session(const json& config);
Window make_window(const json& config);

json descriptor_to_json(const ModuleDescriptor& d);
ModuleDescriptor descriptor_from_json(const json& j);

struct RunResult {
    json result;
    json stability;  // {"windowed": bool, ...}
    std::vector<std::vector<std::string>> table;  // CSV rows, header first
};

// Runs one command on a validated config. Throws virg::Error on failure.
RunResult run(const std::string& command, const json& config);

// Full CLI entry point: argument parsing, config loading, output and exit codes.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace virg::cli
