#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pihall {

// Parses argv-style arguments (program name excluded), runs one command,
// and writes results to out and diagnostics to err. Exit codes: 0 success,
// 1 usage error, 2 computation error, 3 counterexample found by a
// verification suite.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pihall
