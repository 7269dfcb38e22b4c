#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace powerseq {

/// Runs one subcommand; `args` excludes the program name.
/// Exit codes: 0 success, 1 usage error, 2 verification failure.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace powerseq
