#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twophoton {

enum ExitCode : int {
  kExitPass = 0,
  kExitVerificationFailure = 1,
  kExitInputError = 2,
  kExitDomainError = 3,
};

/// One batch command, `args` without the program name. Documents go to `out`
/// (or the --out file), diagnostics to `err`. Returns an ExitCode.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
            std::ostream &err);

} // namespace twophoton
