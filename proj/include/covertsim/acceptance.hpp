#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace covertsim {

// The verification gate: ten numbered criteria, each a named suite of
// checks at pinned parameters and tolerances, plus two asymptotic-regime
// supplements. Suites print one PASS/FAIL line per criterion (and one per
// clause) and are also what `covertsim accept <suite>` runs.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // measured value vs bound, tolerances, etc.
};

struct SuiteResult {
    std::string suite;
    std::string title;
    std::vector<CheckResult> checks;
    double seconds = 0.0;
    bool pass() const;
};

// Canonical suite order: pinsker_tv, kl_identity, theorem1, theorem2,
// fragility, impossibility, risk_gap, theorem4, determinism, psi_bounds,
// then the supplements theorem1_asymptotic, theorem2_asymptotic.
const std::vector<std::string>& acceptance_suites();

bool is_acceptance_suite(std::string_view name);

SuiteResult run_acceptance_suite(std::string_view name, int threads = 0);

// "all" runs every suite in canonical order.
std::vector<SuiteResult> run_acceptance(std::string_view name_or_all, int threads = 0);

void print_suite_result(const SuiteResult& result, std::ostream& os);

}  // namespace covertsim
