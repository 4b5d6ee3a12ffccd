#pragma once

#include <iosfwd>

namespace leelab::cli {

// Parses argv and runs one subcommand. Exit codes: 0 success, 1 usage error,
// 2 capacity exceeded, 3 invariant violation or internal error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace leelab::cli
