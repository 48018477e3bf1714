#pragma once

#include <ostream>

namespace autopos::cli {

enum ExitCode : int {
    ok = 0,
    usage_error = 1,
    negative_verdict = 2,
    precondition_failed = 3,
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace autopos::cli
