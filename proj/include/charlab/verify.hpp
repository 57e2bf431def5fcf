#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace charlab {

/// One acceptance criterion: computed/expected summary, exact pass/fail, and
/// the wall-clock budget it must meet.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
    double limit_seconds = 0.0;
};

struct VerifyReport {
    std::vector<CriterionResult> results;
    bool all_pass = false;
};

/// Run the acceptance suite. full_desk runs every criterion at its stated
/// sweep; the small scale shrinks the sweeps for a quick signal. The seed
/// feeds the randomized criteria.
VerifyReport verify_all(bool full_desk, std::uint64_t seed = 12345);

std::string format_report(const VerifyReport& report);

} // namespace charlab
