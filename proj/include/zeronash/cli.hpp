// Command-line surface.  run() parses the argument list (without argv[0]),
// executes one subcommand and writes its report to out.
//
// Exit codes: 0 for success and passing verdicts, 1 for failing verdicts
// (infeasible, verification failure), 2 for usage and input errors.  All
// output is deterministic: the same arguments produce the same bytes.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zeronash::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zeronash::cli
