#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxgenus {

/// Process exit codes of the `maxgenus` tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,         // bad arguments, unreadable file, malformed config
  kExitDisconnected = 2,  // input graph is not connected
  kExitParse = 3,         // edge list or rotation text rejected
  kExitLimit = 4,         // exact oracle size limit exceeded
  kExitCheckFailed = 5,   // oracle disagreement or bench violation
};

/// Runs `maxgenus <args...>` (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxgenus
