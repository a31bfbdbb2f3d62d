#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simplicia {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitIo = 2,
    kExitInvalidComplex = 3,
    kExitUnsupportedDimension = 4,
    kExitCheckFailed = 5,
};

/// Runs one command. `args` excludes the program name, e.g.
/// {"bsd", "triangle.json", "-n", "2"}. Primary output goes to `out` (or to
/// --out PATH), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simplicia
