#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pensemble {

/// Runs one CLI invocation. args excludes the program name. Structured output
/// goes to out, diagnostics to err. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pensemble
