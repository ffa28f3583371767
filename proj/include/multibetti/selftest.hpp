#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace multibetti {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail; // sample counts on success, first witness on failure
};

struct SelftestOptions {
    std::uint64_t seed = 20260810;
    bool parallel = true;
    int matroid_trials = 200;   // criteria 5-6
    int pair_trials = 100;      // criterion 7
    int monomial_trials = 100;  // criteria 9-10
};

// The acceptance suite: every criterion at its stated sample size, exact
// arithmetic, zero tolerance.
std::vector<CriterionResult> run_acceptance(const SelftestOptions& opts = {});

} // namespace multibetti
