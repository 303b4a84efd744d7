#pragma once

// Runs the command-line binary (path injected at compile time) and captures
// standard output plus the exit code.  Standard error is discarded.

#include <sys/wait.h>

#include <cstdio>
#include <stdexcept>
#include <string>

namespace cli_support {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

inline CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(HOMSTAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    CliResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    return res;
}

}  // namespace cli_support
