// The skeinlab command line.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skeinlab {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. SKEINLAB_SEED supplies the default seed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skeinlab
