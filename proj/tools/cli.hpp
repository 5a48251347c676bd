#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crossing::cli {

enum ExitCode { kOk = 0, kUsage = 1, kBudget = 2, kInvariant = 3 };

/// Runs the `crossing` command line; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(const std::string& text);

}  // namespace crossing::cli
