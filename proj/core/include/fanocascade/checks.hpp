#pragma once

#include <string>
#include <vector>

namespace fano {

/// Outcome of one reference check: a stable display name, the verdict, and a
/// line oriented account of what was compared (failures first).
struct CheckResult {
    std::string name;
    bool pass{false};
    std::string detail;
};

/// Runs one of the nine reference checks, numbered 1 through 9. Throws
/// OutOfRange for any other number. Each check is deterministic; the
/// randomized property suite uses a fixed seed.
CheckResult run_criterion(int number);

/// All nine checks, in order.
std::vector<CheckResult> run_all_criteria();

}  // namespace fano
