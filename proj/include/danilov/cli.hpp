#pragma once

#include <iosfwd>

namespace danilov {

// Full command-line driver: parses argv, writes the report to out and
// diagnostics to err.  Exit codes: 0 all certificates pass, 1 certificate
// failure (witness printed), 2 usage or validation error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace danilov
