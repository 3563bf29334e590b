#pragma once

// Canonical byte strings for incidence graphs under colour-preserving
// isomorphism. Two graphs are isomorphic iff their canonical strings agree,
// so the string doubles as a dedupe key for enumeration sweeps.

#include <cstdint>
#include <string>

#include "hgx/hypergraph.hpp"

namespace hgx {

struct CanonicalBudget {
    // Cap on the number of blue orderings explored. Colour refinement usually
    // collapses this to a handful; fully symmetric instances are the worst case.
    std::int64_t max_orders = 2'000'000;
};

std::string canonical_form(const IncidenceGraph& i, const CanonicalBudget& budget = {});

bool isomorphic(const IncidenceGraph& a, const IncidenceGraph& b,
                const CanonicalBudget& budget = {});

// Convenience: canonical form of the incidence view.
std::string canonical_form(const Hypergraph& h, const CanonicalBudget& budget = {});

}  // namespace hgx
