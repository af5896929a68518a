#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace immvar {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // witness description when the check fails
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass() const;
};

// The per-module invariant suites, in a fixed order.
std::vector<std::string> suite_names();

// Throws InvalidArgumentError on an unknown suite name. The seed feeds every
// randomized check, so runs are reproducible.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);

std::vector<SuiteReport> run_all_suites(std::uint64_t seed);

} // namespace immvar
