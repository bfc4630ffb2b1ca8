#pragma once

#include <iosfwd>
#include <string>

namespace lagcorr {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

/// Directory holding the shipped example data: $LAGCORR_DATA_DIR if set,
/// otherwise the directory configured at build time.
std::string data_dir();

/// Run the command line `argv` (argv[0] is the program name), writing the
/// report to `out` and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lagcorr
