#pragma once

#include <ostream>

namespace toeplab::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitBadFlags = 2,
    kExitUnivalence = 3,
    kExitIo = 4,
    kExitConvergence = 5,
    kExitResolution = 6,
};

/// Entry point of the `toeplab` executable with injectable streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toeplab::cli
