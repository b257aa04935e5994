// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

// The lexlint command line, callable in-process for tests.

#ifndef LEXLINT_CLI_CLI_H_
#define LEXLINT_CLI_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace lexlint::cli {

enum ExitCode : int {
  kExitClean = 0,
  kExitViolations = 1,  // only with --fail-on-violation
  kExitUsage = 2,       // bad flags or configuration
  kExitInput = 3,       // unreadable or malformed input
};

// `args` excludes the program name. Reports go to `out` unless --output is
// given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lexlint::cli

#endif  // LEXLINT_CLI_CLI_H_
