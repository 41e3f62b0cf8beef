#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace moduli::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitNotAdmissible = 1,
  kExitConditional = 2,
  kExitInputError = 3,
};

/// Entry point of moduli-lab. `args` excludes the program name. Output goes
/// to `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moduli::cli
