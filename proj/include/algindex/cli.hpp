// Command-line surface. run_command is the whole CLI behind a function call
// (the binary's main just forwards argv), which lets tests and the acceptance
// suite compare report bytes in-process.
//
// Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
// input error.
#pragma once

#include <string>
#include <vector>

namespace algindex {

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CommandResult run_command(const std::vector<std::string>& args);

}  // namespace algindex
