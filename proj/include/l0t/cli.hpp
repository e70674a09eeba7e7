#pragma once

// Front end: check documents, print norms, run verification suites.

#include <iosfwd>
#include <string>
#include <vector>

namespace l0t {

/// Runs one command (args exclude the program name) against the streams.
/// Returns the exit status: 0 everything passed, 1 a declared property
/// failed, 2 the input was unusable.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace l0t
