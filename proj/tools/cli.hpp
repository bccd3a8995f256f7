#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpgcli {

/// Runs one mpgtool invocation. Exit codes: 0 success, 1 usage error,
/// 2 precondition or parse error, 3 theorem alarm.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpgcli
