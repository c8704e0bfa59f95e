#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kron/characters.hpp"

namespace kron::verify {

struct CheckResult {
    std::string key;         // short stable identifier, e.g. "recovery-formula"
    std::string description; // what was checked, with the ranges used
    bool passed = false;
    std::string detail;      // counts on success, the first counterexample on failure
    double seconds = 0;
};

/// Sizes of the exhaustive and sampled ranges. The defaults are the full
/// acceptance ranges.
struct Limits {
    int recover_max_degree = 7;
    int oracle_max_weight = 4;
    int attainment_max_weight = 5;
    int comparison_max_weight = 6;
    int comparison_random_weight = 10;
    int comparison_random_count = 1000;
    int hook_max = 5;
    int two_row_max = 4;
    int monotone_max_weight = 6;
    int monotone_count = 200;
    int littlewood_max_total = 6;
    int semigroup_max_weight = 4;
    int semigroup_count = 100;
    std::uint64_t seed = 0x5eed2010;

    /// Every weight-like range capped at max_weight; sample counts unchanged.
    Limits clamped(int max_weight) const;
};

struct Check {
    std::string key;
    std::string suite;
    std::function<CheckResult(const Limits&, CharacterCache&)> run;
};

/// Every check, grouped by suite ("intro", "bounds", "theorems") in a fixed order.
const std::vector<Check>& all_checks();

/// Suite names accepted by run_suite, plus "all".
std::vector<std::string> suite_names();

/// Runs the checks of one suite (or "all") in order. Throws
/// std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, const Limits& limits,
                                   CharacterCache& cache = default_character_cache());

} // namespace kron::verify
