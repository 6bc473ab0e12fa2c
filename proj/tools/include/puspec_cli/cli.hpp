// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace puspec::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kInfeasible = 3,
  kIo = 4,
};

/// Runs the tool with `args` (args[0] is the program name). Errors are
/// reported as one JSON line on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Blocks serving the HTTP API on host:port.
int serve(const std::string& host, int port, std::ostream& out);

}  // namespace puspec::cli
