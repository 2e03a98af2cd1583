#ifndef MXGUARD_TOOLS_CLI_HPP_
#define MXGUARD_TOOLS_CLI_HPP_

#include <iosfwd>

namespace mxguard::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFaultDetected = 1;
inline constexpr int kExitUsage = 2;

// Entry point shared by the executable and the tests. Report output goes to
// `out` unless --out names a file; diagnostics go to `err`.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace mxguard::cli

#endif  // MXGUARD_TOOLS_CLI_HPP_
