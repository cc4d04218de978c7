#pragma once

#include <string>
#include <vector>

namespace hazvis::vebench {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Fast oracle and property checks over every module (well under a second).
std::vector<CheckResult> run_selftest();

}  // namespace hazvis::vebench
