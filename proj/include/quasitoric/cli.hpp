#pragma once

#include <string>
#include <vector>

#include "quasitoric/report.hpp"
#include "quasitoric/verify.hpp"

namespace quasitoric {

/// Exit codes of the command line tool.
///   0  success
///   1  I/O, parse or usage errors
///   2  domain rejections (validation failure, non-simple polytope,
///      point outside the admissible set)
///   3  verification failures
struct CommandResult {
    int exit_code = 0;
    std::string report;  // JSON text
};

/// Parse and run one command line (without the program name). Never throws;
/// errors are encoded in the exit code and report.
CommandResult run_command(const std::vector<std::string>& args);

/// Full entry point: runs the command and writes the report to stdout or to
/// the --out path.
int run_cli(int argc, char** argv);

}  // namespace quasitoric
