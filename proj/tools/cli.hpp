#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ehrhart::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFatal = 1;        // a proven identity failed, or internal inconsistency
inline constexpr int kUsage = 2;        // bad flags, unreadable or invalid input
inline constexpr int kComputation = 3;  // budget exceeded, generator exhausted

/// Entry point behind the `ehrhart` executable. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ehrhart::cli
