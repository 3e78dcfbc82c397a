#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitIncomplete = 3;
inline constexpr int kExitInternal = 4;

/// Runs one command line. args excludes the program name. JSON and tables
/// go to out, diagnostics to err; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rainbow::cli
