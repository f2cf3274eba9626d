#pragma once

// Verification suites shared by the CLI (`verify ...`) and the acceptance
// test binary. Each suite is deterministic for a given seed.

#include <cstdint>
#include <string>
#include <vector>

namespace block::suites {

struct SuiteResult {
    int id = 0;                  // acceptance criterion number, 0 for ad hoc runs
    std::string name;
    bool passed = false;
    std::string detail;          // counts on success, first failure otherwise
    double seconds = 0.0;        // wall time; never part of the printed report
    double budget_seconds = 0.0; // runtime budget for the criterion
};

struct SampleOptions {
    std::uint64_t seed = 0;
    std::size_t samples = 0; // 0 means the suite default
};

SuiteResult lie_axioms(const SampleOptions &opt);        // 1
SuiteResult shift_isomorphism(const SampleOptions &opt); // 2
SuiteResult cocycles();                                  // 3
SuiteResult derivations(const SampleOptions &opt);       // 4
SuiteResult h1_windows();                                // 5
SuiteResult recurrences();                               // 6
SuiteResult automorphisms(const SampleOptions &opt);     // 7
SuiteResult restrictions(const SampleOptions &opt);      // 8
SuiteResult probes();                                    // 9
SuiteResult bracket_identities();                        // 10
SuiteResult text_and_export(const SampleOptions &opt);   // 11

// Every criterion in order.
std::vector<SuiteResult> run_all(std::uint64_t seed);

// One "PASS|FAIL [id] name: detail" line per result, preceded by a seed line.
// Contains no timings so identical seeds give identical bytes.
std::string format_report(std::uint64_t seed, const std::vector<SuiteResult> &results);

} // namespace block::suites
