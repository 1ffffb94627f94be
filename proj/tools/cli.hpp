#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sedenion::cli {

/// Runs one command line (without the program name). Returns the exit status:
/// 0 on success, 1 when a verification fails, 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sedenion::cli
