#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fraccore {

// Entry point of the command-line tool.  args excludes the program name.
// Returns 0 on success, 1 on usage errors (bad flags, malformed
// expressions), 2 on numeric/domain failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace fraccore
