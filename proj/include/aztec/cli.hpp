#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aztec::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs one command line (without the program name). Results go to `out`
/// (or to the --out path), diagnostics to `err`; `in` feeds `signature`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace aztec::cli
