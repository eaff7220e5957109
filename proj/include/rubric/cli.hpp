#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rubric::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. Domain errors print "error: <code>: <message>" to
/// `err` and return 1; usage errors return 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Top-level subcommand names, in help order.
std::vector<std::string> subcommands();

}  // namespace rubric::cli
