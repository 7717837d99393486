// Acceptance gate: runs every criterion on the full grid and prints one
// pass/fail line per criterion. Exits nonzero when any criterion fails.

#include <cstring>
#include <iostream>

#include "kummerlab/acceptance.hpp"

int main(int argc, char** argv) {
    kummerlab::AcceptanceConfig cfg;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--small") == 0) cfg.small_grid = true;
    }
    const auto results = kummerlab::run_acceptance(cfg, &std::cout);
    const bool ok = kummerlab::all_passed(results);
    std::cout << (ok ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
              << (cfg.small_grid ? "small" : "full") << " grid)" << std::endl;
    return ok ? 0 : 1;
}
