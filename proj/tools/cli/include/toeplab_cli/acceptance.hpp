#pragma once

#include <functional>
#include <string>
#include <vector>

#include "toeplab_cli/reports.hpp"

namespace toeplab::cli {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;       // numerical checks and runtime budget
    bool within_budget = false;
    double budget_seconds = 0.0;
    double elapsed_seconds = 0.0;
    std::string summary;
    Json details;
};

/// Runs the eleven acceptance criteria in order at their pinned tolerances.
/// `on_result` fires after each criterion so callers can stream progress.
std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result = {});

/// One human-readable line: `PASS  3  geometry closed forms  (0.001 s, budget 1 s)  ...`.
std::string format_line(const CriterionResult& result);

/// Report body for `toeplab verify`. Elapsed times are left out so that
/// repeated runs serialize identically.
Json acceptance_json(const std::vector<CriterionResult>& results);

}  // namespace toeplab::cli
