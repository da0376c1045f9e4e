#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace teamseq::cli {

/// Exit codes of every command.
inline constexpr int kOk = 0;
inline constexpr int kRuntimeError = 1;
inline constexpr int kUsageError = 2;

/// Environment variable naming the default output root.
inline constexpr const char* kOutputRootEnv = "TEAMSEQ_OUTPUT_ROOT";

/// $TEAMSEQ_OUTPUT_ROOT, or "teamseq_out" when unset or empty.
std::filesystem::path output_root();

/// Runs `teamseq <args...>` (args excludes the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace teamseq::cli
