#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kummerlab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail; // first failures, or summary counts
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

struct AcceptanceConfig {
    // Reduced sample counts and prime grids; the full grid is the release
    // gate, the small grid is for quick local runs.
    bool small_grid = false;
};

// Runs the ten acceptance criteria. When progress is non-null, one
// human-readable pass/fail line per criterion (with timing) is streamed to
// it. A criterion fails if its checks fail or its runtime budget is blown.
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg, std::ostream* progress);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace kummerlab
