#pragma once

// Entry point of the `sfc` command-line tool, callable in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace sfc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kSchemaVersion = 1;

// args excludes the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Worker count from SFC_WORKERS, else the hardware concurrency (at least 1).
unsigned default_workers();

}  // namespace sfc::cli
