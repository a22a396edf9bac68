#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace geodetic::cli {

/// Stable exit codes.
enum ExitCode : int {
    kClaimHolds = 0,
    kWitnessFound = 1,
    kUsageError = 2,
};

struct CommandOutcome {
    int exit_code = kClaimHolds;
    std::optional<std::string> report_path;
};

/// argv[0] is the program name.
CommandOutcome run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace geodetic::cli
