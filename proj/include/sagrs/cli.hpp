#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace sagrs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRunFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "SAGRS_OUT_DIR";

/// Entry point of the `sagrs` tool. `args` excludes the program name.
int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sagrs::cli
