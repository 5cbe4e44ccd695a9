#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jetsym {

/// Runs one command-line invocation (arguments without the program name).
/// Exit codes: 0 every requested check passed, 1 a check failed, 2 parse,
/// genericity or budget error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jetsym
