#pragma once

// Named one-shot reproduction checks. Each check runs a self-contained
// experiment (depth formulas, sweep properties, scripted derivations, hom
// vector comparisons, logic evaluation) and reports one row per sub-claim
// with the expected and computed values side by side. The acceptance test
// binary and the `repro` CLI verb both drive these.

#include <string>
#include <vector>

namespace hgx {

struct ReproRow {
    std::string check;     // check id, e.g. "hd-paths"
    int criterion = 0;     // acceptance criterion the row belongs to (1..12)
    std::string claim;     // the statement being verified
    std::string expected;
    std::string computed;
    bool pass = false;
    long long ms = 0;      // wall time for this row's computation
};

// Check ids, in run order for "all". "skew-k1" covers both skewness
// statements (criteria 7 and 8).
std::vector<std::string> repro_check_ids();

// Runs one named check (or "all"). fixtures_dir locates the bundled .hg,
// .gli and .gcl files. Throws std::invalid_argument for an unknown id and
// BudgetError when the GH_BUDGET_MS wall-time cap (per check) is exceeded.
std::vector<ReproRow> run_repro(const std::string& check, const std::string& fixtures_dir);

}  // namespace hgx
