#ifndef TELUGU_ENTROPY_TOOLS_CLI_HPP
#define TELUGU_ENTROPY_TOOLS_CLI_HPP

#include <ostream>

namespace telugu_entropy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

/// Entry point for the `telugu-entropy` tool. Reports go to --out or `out`;
/// diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace telugu_entropy::cli

#endif
