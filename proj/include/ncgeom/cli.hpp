#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ncgeom::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs `ncverify` with the given arguments (program name excluded). The text
/// report goes to `out`, diagnostics to `err`; `--json <path>` additionally
/// writes the structured report.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncgeom::cli
