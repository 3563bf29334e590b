// Acceptance gate: runs every reproduction check and prints exactly one
// verdict line per criterion. A criterion passes when all of its rows do;
// a failing criterion shows its first failing row. Exit status is the
// number of failing criteria.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "hgx/errors.hpp"
#include "hgx/repro.hpp"

int main() {
    std::vector<hgx::ReproRow> rows;
    try {
        rows = hgx::run_repro("all", HGX_FIXTURES);
    } catch (const std::exception& e) {
        std::cout << "acceptance aborted: " << e.what() << "\n";
        return 99;
    }

    std::map<int, std::vector<const hgx::ReproRow*>> by_criterion;
    for (const auto& r : rows) by_criterion[r.criterion].push_back(&r);

    int failed = 0;
    for (int c = 1; c <= 12; ++c) {
        const auto it = by_criterion.find(c);
        if (it == by_criterion.end()) {
            ++failed;
            std::cout << "criterion " << c << ": FAIL - no rows produced\n";
            continue;
        }
        const hgx::ReproRow* bad = nullptr;
        long long ms = 0;
        for (const auto* r : it->second) {
            ms += r->ms;
            if (!r->pass && !bad) bad = r;
        }
        if (!bad) {
            std::cout << "criterion " << c << ": PASS - " << it->second.size() << " rows, "
                      << ms << " ms\n";
        } else {
            ++failed;
            std::cout << "criterion " << c << ": FAIL - " << bad->claim << " (expected "
                      << bad->expected << ", computed " << bad->computed << ")\n";
        }
    }
    return failed;
}
