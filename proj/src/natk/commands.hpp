#pragma once

#include "natk/natfile.hpp"
#include "natk/report.hpp"

namespace natk {

struct RunOptions {
    bool json = true;
    std::uint64_t seed = 1;
    int threads = 1;
    std::optional<std::string> out;
    std::optional<std::string> name;
    std::optional<std::size_t> max;
    bool dedup = false;
    std::size_t bound = 4096;
};

struct CommandResult {
    Report report;
    std::optional<std::string> document;  // canonical .nat text, for emitting commands
    RunOptions options;                   // flags as parsed (the CLI needs --json)
};

/// Parses and dispatches one command line (without the program name).
/// Exit code semantics: 0 = property holds / success, 1 = property fails
/// (with witnesses), 2 = input or usage error. Never throws; errors become
/// reports.
CommandResult run_command(const std::vector<std::string>& argv, Session& session);

}  // namespace natk
