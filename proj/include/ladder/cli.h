#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ladder {

/// Runs one ladder-forge command. args excludes the program name.
/// Returns 0 when every report row passes, 1 on a failed check and 2 on a
/// usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ladder
