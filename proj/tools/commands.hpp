#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace affcone::cli {

enum ExitCode { kOk = 0, kInvalidInput = 2, kUndecided = 3, kConsistencyFault = 4 };

struct RunConfig {
    std::string command;
    std::string type = "A1~";
    int max_len = -1;  // -1: per-type default, or sized to the certificate by member and saturate
    long depth = 6;
    int jobs = 1;
    std::string out;

    // Command parameters.
    std::string lambda1, lambda2, mu;
    std::vector<std::string> triples;  // "lambda1 ; lambda2 ; mu"
    long window = 6;
    long d = 2;
    std::string mode = "stretch";
    int node = -1;  // structure-constants: -1 for the Borel
};

struct CommandOutput {
    nlohmann::ordered_json doc;
    int exit_code = kOk;
};

/// Runs one subcommand. Never throws: failures become an "error" entry and
/// the matching exit code.
CommandOutput run_command(const RunConfig& config);

}  // namespace affcone::cli
