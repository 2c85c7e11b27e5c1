#pragma once

#include <iosfwd>

namespace nhlc {

/// Runs the nhlc command line. Exit status: 0 without violations, 1 on violations or
/// input errors, 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nhlc
