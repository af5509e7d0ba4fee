#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace knormal::cli {

/// Runs one CLI invocation. args excludes the program name. Returns the
/// process exit status: 0 ok, 1 claim failure, 2 usage error, 3 resource or
/// factorization limit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knormal::cli
