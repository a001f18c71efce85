#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gjg::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConfig = 3;

struct Environment {
  /// Value of GJG_MAX_VERTICES, if set. --max-vertices takes precedence.
  std::optional<std::string> max_vertices;
};

Environment environment_from_process();

/// Runs one command line (args[0] is the program name) and returns the
/// process exit code. All output goes to out / err.
int run(const std::vector<std::string>& args, const Environment& env, std::ostream& out, std::ostream& err);

}  // namespace gjg::cli
