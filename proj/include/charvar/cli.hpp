#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace charvar::cli {

/// Environment variable holding the worker thread count (default: all cores).
inline constexpr const char* kThreadsEnv = "CHARVAR_THREADS";

/// Reads kThreadsEnv; throws InvalidArgument on a malformed value.
unsigned thread_count();

/// Runs the command line `args` (without the program name). Results go to
/// out, diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace charvar::cli
