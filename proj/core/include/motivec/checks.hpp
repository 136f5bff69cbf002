#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace motivec {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs every module's invariant suite with a fixed seed. This is what
/// `motivec --mode check` executes.
std::vector<CheckResult> run_all_checks(std::uint64_t seed = 20240611);

std::vector<CheckResult> check_graded_ring(std::uint64_t seed);
std::vector<CheckResult> check_fgl(std::uint64_t seed);
std::vector<CheckResult> check_theory(std::uint64_t seed);
std::vector<CheckResult> check_cellular(std::uint64_t seed);
std::vector<CheckResult> check_tate(std::uint64_t seed);

} // namespace motivec
