#pragma once

#include <string>
#include <vector>

namespace stirdet {

struct CheckResult {
    std::string name;
    bool passed = false;
    /// First counterexample or a short summary.
    std::string detail;
};

/// Runs every library invariant with ranges scaled from `max`; at max = 6 the ranges
/// cover Stirling tables to 12, specializations to 10, determinants to 6x6,
/// beta/gamma/duality to 6 and generating functions to a = 5.
std::vector<CheckResult> run_verification(int max);

}  // namespace stirdet
