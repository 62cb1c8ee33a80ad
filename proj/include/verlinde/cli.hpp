#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace verlinde {

/// Exit codes: 0 success, 1 verification violation or runtime failure,
/// 2 usage or malformed input, 3 resource cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace verlinde
