#pragma once

#include <iosfwd>

namespace monoconv::cli {

enum ExitCode : int { ok = 0, usage = 1, verification_failed = 2, scale_refused = 3 };

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace monoconv::cli
