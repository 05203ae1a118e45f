#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nrack::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kAxiomFailure = 1, kInputError = 2, kBudget = 3 };

/// Runs one command line (args excludes the program name). Results go to
/// `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nrack::cli
