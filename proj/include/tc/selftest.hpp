#pragma once

/**
 * @file selftest.hpp
 * @brief The acceptance criteria, runnable as a registry: each criterion
 *        prints one PASS/FAIL line and all tolerances are exact.
 */

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tc {

struct SelftestOptions {
    std::string filter;            // substring match on criterion names
    std::uint64_t seed = 20250801;  // randomized checks derive from this
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::string detail;
};

/// Runs every matching criterion, streaming one line per criterion.
std::vector<CriterionResult> run_acceptance(const SelftestOptions& options, std::ostream& progress);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace tc
