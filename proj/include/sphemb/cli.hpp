#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sphemb::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kUsage = 2;
inline constexpr int kDomain = 3;
inline constexpr int kOracleInstability = 4;

/// Runs one command. `args` excludes the program name. Exactly one JSON
/// document is written to `out`: {"command", "inputs", "status", "result"}
/// on success, {"command", "inputs", "status", "message"} on error.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace sphemb::cli
