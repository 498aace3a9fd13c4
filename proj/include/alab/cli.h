#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace alab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs one command line (argv[0] is the program name). Results go to `out`
/// unless --output is given; diagnostics and run metadata go to `err`.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace alab::cli
