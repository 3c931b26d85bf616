#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orepack::cli {

// Exit codes shared by every verb.
enum ExitCode : int {
    kOk = 0,             // success, YES
    kNegative = 1,       // NO, NONE, failed verification, probe violation
    kInputError = 2,     // unreadable or malformed input, bad flags
    kPrecondition = 3,   // inputs parse but violate an operation's precondition
    kBudget = 4,         // search budget or enumeration cap exhausted
};

// Runs one invocation. args[0] is the program name. Graph file arguments
// equal to "-" read from `in`. Machine-readable output goes to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace orepack::cli
