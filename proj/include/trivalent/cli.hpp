#pragma once

#include <ostream>

namespace trivalent {

/// Entry point of the `trivalent` command. Exit codes: 0 success (valid,
/// witness found, all claims pass), 1 negative verdict, 2 usage or input
/// error, 3 resource cap exceeded.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trivalent
