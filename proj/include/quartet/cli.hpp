#pragma once

// Command-line front end, kept in the library so tests can drive it without
// spawning processes. Exit codes: 0 success or solution, 1 verification
// failure, table mismatch or pole, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace quartet {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Default cap on the search index estimate when QUARTET_MAX_INDEX_BYTES is unset.
inline constexpr std::size_t kDefaultMaxIndexBytes = std::size_t{2} << 30;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quartet
