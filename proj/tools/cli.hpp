#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace distq::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kExitMatch = 0;
inline constexpr int kExitNoMatch = 1;
inline constexpr int kExitError = 2;

/// Runs the `distq` command line. `args` excludes the program name. Results go
/// to `out`, warnings and errors to `err`.
///
///   search  print occurrence positions; exit 0 on a match, 1 on none
///   bench   run a benchmark and emit a CSV or Markdown report
///   gen     write a generated corpus (and its pattern) to files
///
/// Any usage, configuration or I/O error exits with 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace distq::cli
