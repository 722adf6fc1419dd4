#pragma once

#include <string>
#include <vector>

namespace polyball::cli {

struct RunResult {
    int exit_code = 0;
    std::string output;  // stdout payload
    std::string error;   // stderr payload
};

/// Runs one CLI invocation (args exclude argv[0]). Exit codes: 0 success,
/// 1 input/validation error, 2 internal inconsistency.
RunResult run(const std::vector<std::string>& args);

/// argv wrapper around run(); prints output/error and returns the exit code.
int main_entry(int argc, char** argv);

}  // namespace polyball::cli
