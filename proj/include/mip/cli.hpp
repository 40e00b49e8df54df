#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mip::cli {

// Exit codes: 0 success (compare: not distinguished), 1 distinguished /
// check failed, 2 usage or runtime error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace mip::cli
