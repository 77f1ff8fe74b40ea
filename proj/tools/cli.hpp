#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morse::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the `morse` binary and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "0,5,7" or "0-7" (or a mix, "0-2,5"). Throws std::invalid_argument
/// on empty or malformed lists.
std::vector<int> parse_index_list(const std::string& text);

}  // namespace morse::cli
