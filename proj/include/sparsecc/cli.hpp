#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sparsecc::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kUsage = 2;
inline constexpr int kResource = 3;
inline constexpr int kConsistency = 4;

// Runs one subcommand and writes its report to `out`. Diagnostics go to `err`.
int dispatch(int argc, char** argv, std::ostream& out, std::ostream& err);
// args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sparsecc::cli
