#pragma once

#include <iosfwd>

namespace gsp::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kParamError = 1,
    kDependentInput = 2,
    kIoError = 3,
};

/// Entry point for the `gsp` command line; returns the process exit code.
/// Normal output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gsp::cli
