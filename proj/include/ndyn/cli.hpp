#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ndyn::cli {

enum ExitCode { Ok = 0, Usage = 1, Computation = 2, VerificationFailed = 3 };

/// Runs one command line; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ndyn::cli
