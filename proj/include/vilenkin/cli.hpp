#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vilenkin::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kConfigError = 2,
};

/// Runs one experiment command. `args` excludes the program name, e.g.
/// {"kernel-profile", "--group", "2", "--levels", "3"}. CSV goes to the
/// --out path (or `out` when absent); one summary line per check goes to
/// `log`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& log, std::ostream& err);

}  // namespace vilenkin::cli
