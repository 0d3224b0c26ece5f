#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratdist::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Results go to
/// out, diagnostics to err; returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratdist::cli
