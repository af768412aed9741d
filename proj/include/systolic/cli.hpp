#pragma once

#include <iosfwd>

namespace systolic::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kPreconditionFailure = 3,
};

/// Entry point of the `systolic` tool: subcommands bounds, verify, construct.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace systolic::cli
