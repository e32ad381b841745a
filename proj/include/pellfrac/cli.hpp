#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pellfrac::cli {

// Runs one CLI invocation. argv excludes the program name. Output goes to
// `out` (results) and `err` (diagnostics). Exit codes: 0 success, 1 usage or
// domain error, 2 computation succeeded but a predicted property failed.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace pellfrac::cli
