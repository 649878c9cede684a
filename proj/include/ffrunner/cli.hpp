#pragma once

#include <iosfwd>

namespace ffr {

// Parses argv, dispatches to the library and writes one report to `out`.
// Exit codes: 0 success or suite pass, 1 suite failure, 2 usage error,
// 3 cap or budget exceeded.
int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ffr
