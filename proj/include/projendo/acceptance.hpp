#pragma once

#include <string>
#include <vector>

namespace projendo {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double time_limit = 0;  // seconds; 0 means untimed
};

/// Runs the eight acceptance criteria. A criterion passes only when its
/// checks hold exactly and it finishes within its time limit.
std::vector<CriterionResult> run_acceptance();

} // namespace projendo
