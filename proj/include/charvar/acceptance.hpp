#pragma once

/**
 * @file acceptance.hpp
 * @brief The invariant suite behind `charvar selftest` and the acceptance binary.
 */

#include <string>
#include <vector>

namespace charvar {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// Number of criteria; ids run from 1 to kCriterionCount.
constexpr int kCriterionCount = 11;

/// Runs one criterion. Exceptions thrown by the library are caught and
/// reported as failures. threads only affects the finite-field counts.
CriterionResult run_criterion(int id, unsigned threads = 1);
std::vector<CriterionResult> run_acceptance(unsigned threads = 1);

/// "[PASS] 1 name (0.12 s): detail", one line per result.
std::string format_line(const CriterionResult& r);

}  // namespace charvar
