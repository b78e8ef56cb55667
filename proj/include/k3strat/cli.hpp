#pragma once

#include <string>
#include <vector>

#include "k3strat/json_io.hpp"

namespace k3strat {

// Result of one CLI invocation: an exit code (0 success, 2 usage, 3 domain,
// 4 budget), the machine-readable document, and the text rendering of the
// same values. `format` is the output mode the invocation selected.
struct CommandOutcome {
    int exit_code = 0;
    std::string format = "json";
    Json payload;
    std::string text;
};

// Parses and executes one invocation; args exclude the program name.
// Never throws: errors come back as outcomes with structured payloads.
CommandOutcome run_command(const std::vector<std::string>& args);

// Prints the outcome (stdout on success, stderr on error) and returns the
// exit code.
int run_cli(int argc, char** argv);

}  // namespace k3strat
