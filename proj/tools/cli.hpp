#pragma once

#include <iosfwd>

namespace latlab {

// Full command-line entry point. Writes results to `out`, diagnostics and
// error JSON to `err`. Returns 0 on success, 1 on domain errors, 2 on usage
// errors.
int run_cli(int argc, const char* const argv[], std::ostream& out, std::ostream& err);

}  // namespace latlab
