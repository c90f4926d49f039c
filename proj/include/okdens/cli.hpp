#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "okdens/bigint.hpp"

namespace okdens {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitInputError = 2,
    kExitNotUnimodular = 3,
};

/// Resolves a --field argument: one of the aliases "Q", "Q(sqrt2)",
/// "x^3+x+1", "x^5-13x-7", or a coefficient list (comma separated or JSON).
std::vector<BigInt> resolve_field_spec(const std::string& spec);

/// Entry point of the okdens tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace okdens
