#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mip/group.hpp"

namespace mip {

struct LoadedGroup {
    Group G;
    std::string name; // from a "# name: ..." comment, may be empty
};

/**
 * Text formats:
 *   perm <degree>     followed by one generator per line, 1-based images
 *   cayley <n>        followed by n rows of n 0-based indices
 * '#' starts a comment; "# name: X" attaches a name. Blank lines ignored.
 */
LoadedGroup read_group(std::istream& in);
LoadedGroup load_group_file(const std::string& path);

void write_cayley(std::ostream& out, const Group& G,
                  const std::string& name = "");
// Left regular representation of the chosen generators, 1-based images.
void write_perm_regular(std::ostream& out, const Group& G,
                        const std::vector<int>& gens,
                        const std::string& name = "");

} // namespace mip
