#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subspace/scenarios.hpp"

namespace subspace::verify {

struct SuiteResult {
    std::string name;
    int checks = 0;
    int failures = 0;
    /// Worst observed slack: the smallest distance by which an inequality
    /// held (negative means a violation).
    double worst_margin = kInf;
    std::vector<std::string> notes;

    bool passed() const { return failures == 0; }
    void record(bool ok, double margin, const std::string& what);
};

struct Options {
    int trials = 50;
    std::uint64_t seed = 42;
    /// Negative control: corrupt one instance so a failure must be reported.
    bool inject_failure = false;
};

SuiteResult run_rotation_suite(const Options& opt);
SuiteResult run_relemma_suite(const Options& opt);
SuiteResult run_bounds_suite(const Options& opt);
SuiteResult run_numrange_suite(const Options& opt);
SuiteResult run_scenarios_suite(const Options& opt);

std::vector<SuiteResult> run_suites(const std::string& which, const Options& opt);

}  // namespace subspace::verify
