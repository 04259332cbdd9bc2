#pragma once

#include "moduli/cli/serialize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace moduli::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

struct RunConfig {
    std::string command;
    int g = 0;
    int n = 0;
    std::vector<int> degrees;  // empty: trivalent
    std::size_t trials = 30;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
    std::string output;
    std::string charts;
    int d = 0;
    std::vector<int> chord1;
    std::vector<int> chord2;
};

struct CommandResult {
    json body;
    Table table;
    int exit_code = kOk;
};

CommandResult cmd_enumerate(const RunConfig& config);
CommandResult cmd_volume(const RunConfig& config);
CommandResult cmd_psi(const RunConfig& config);
CommandResult cmd_verify_kcf(const RunConfig& config);
CommandResult cmd_identities(const RunConfig& config);
CommandResult cmd_witten12(const RunConfig& config);
CommandResult cmd_angle(const RunConfig& config);

// Dispatches on config.command; library errors become {"error", "kind"} with exit code 2.
CommandResult run(const RunConfig& config);

// Serialized output in the configured format, newline-terminated.
std::string render(const CommandResult& result, const std::string& format);

}  // namespace moduli::cli
