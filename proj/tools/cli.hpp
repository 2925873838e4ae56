#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aalpha::cli {

enum ExitCode : int { ok = 0, usage = 1, precondition = 2, verification_failed = 3 };

// Runs one command line (args excludes the program name). Graph arguments
// named "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace aalpha::cli
