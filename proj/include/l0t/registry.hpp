#pragma once

// Seeded property suites behind `verify` and `report`. Each case is built
// as a work document, parsed back, and judged by its own assertions, so
// every emitted instance replays through `check` verbatim.

#include "l0t/document.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace l0t {

struct SuiteCase {
    int index = 0;
    bool pass = false;
    std::string detail; // "<assertion>: <reason>" for failures
};

struct SuiteResult {
    std::string id;
    int cases = 0;
    int failures = 0;
    std::vector<SuiteCase> results;
    std::string counterexample; // document of the first failing case
    std::string emitted;        // document of the requested case
};

const std::vector<std::string>& theorem_ids();
bool is_theorem_id(const std::string& id);

/// Runs `cases` instances of one suite. Deterministic in (id, seed);
/// `tol` widens the float-route comparisons some suites declare.
/// Unknown ids raise Reference, cases < 1 raises Precondition.
SuiteResult run_suite(const std::string& id, std::uint64_t seed, int cases,
                      int emit_case = -1, double tol = 1e-7);

} // namespace l0t
