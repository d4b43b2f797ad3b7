#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace degsplit::cli {

/// Runs one `degsplit` invocation. `args` excludes the program name.
/// Exit codes: 0 success, 1 verification failure, 2 no accepted trial,
/// 3 usage or precondition error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace degsplit::cli
