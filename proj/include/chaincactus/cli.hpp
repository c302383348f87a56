#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chaincactus {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitParseError = 2,
    kExitResourceCap = 3,
    kExitIoError = 4,
};

/// Name of the environment variable holding the default --format.
inline constexpr const char* kFormatEnvVar = "CHAINCACTUS_FORMAT";

/// Runs the tool on `args` (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace chaincactus
