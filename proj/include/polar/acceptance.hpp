#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polar/json_io.hpp"

namespace polar {

struct CriterionOutcome {
    int id = 0;
    std::string title;
    bool checks_passed = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    json detail;  ///< deterministic summary of what was checked; no timings

    bool within_budget() const { return seconds < budget_seconds; }
    bool passed() const { return checks_passed && within_budget(); }
};

struct AcceptanceOptions {
    std::uint64_t seed = 1;
    std::vector<int> criteria;  ///< subset of 1..9; empty runs all nine
};

/// Runs the numeric acceptance criteria 1..9.
std::vector<CriterionOutcome> run_acceptance(const AcceptanceOptions& opts);

/// The deterministic part of a run: ids, titles, check results and details.
json acceptance_json(const std::vector<CriterionOutcome>& outcomes);

/// Criterion 10: runs the suite at 1 and at 8 workers and compares the JSON bytes.
/// `first` receives the single-worker outcomes so callers need not run them again.
CriterionOutcome determinism_check(const AcceptanceOptions& opts, std::vector<CriterionOutcome>* first = nullptr);

/// "[PASS] 3 planar closed forms (0.41 s / 5 s)".
std::string summary_line(const CriterionOutcome& c);

}  // namespace polar
