#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hgx/elimination.hpp"
#include "hgx/hypergraph.hpp"

namespace hgx {

// Fixed instances and instance families used throughout the test suite and
// the repro checks, plus exhaustive small-instance enumeration.

// The two running examples: G has vertices {a,b,c} and edges i,j,k covering
// each pair plus one edge l covering everything; H has seven vertices and
// four size-3/4 edges that pairwise intersect in six distinct vertices.
Hypergraph example_G();
Hypergraph example_H();

struct NamedForest {
    std::string name;    // "2a", "2b", "2c", "2d"
    std::string target;  // "H", "G", or "P15"
    EliminationForest ef;
};

// The four bundled example forests. "2b"/"2c" target I_G (heights 1 and 2),
// "2d" targets I_{P_15} (height 4). "2a" is the star over H's edges rooted at
// the node mapped to h; note that validate_ef rejects it (the three child
// pairs share vertices absent from the root's content), see the unit tests.
std::vector<NamedForest> fig2_forests();

// Skewness witness pair no. 1: cycles with two singleton hyperedges whose
// distance along the cycle differs by one. k = 1 is the 4-cycle instance
// (adjacent vs. diagonal singletons); k >= 2 uses cycles of 2^{k+1}+2 edges
// with singletons at u_1 and u_{2^k+1} (G) resp. u_{2^k+2} (H).
std::pair<Hypergraph, Hypergraph> skew_pair(int k);

// A member of HD_k with different hom counts into the two sides of
// skew_pair(k). For k >= 2 this is the path P_{2^k} with singleton edges at
// v_1 and v_{2^k+1}; for k = 1 a single edge with singletons at both ends.
Hypergraph skew_distinguisher(int k);

// Skewness witness pair no. 2: cycles with two pendant 2-vertex "handle"
// edges, again at distances differing by one. k = 1 is the 4-cycle instance;
// k >= 2 uses cycles of 2^{k+2}+2 edges with handles at u_1 and
// u_{2^{k+1}-2} (G') resp. u_{2^{k+1}-1} (H').
std::pair<Hypergraph, Hypergraph> skew_pair_prime(int k);

// Incidence-graph distinguisher for skew_pair_prime: the path P_{2^{k+1}-3}
// with singleton edges at v_1 and v_{attach}. attach = 0 selects the default
// index 2^k - 1; that value is degenerate for k = 1 (both singletons land on
// v_1 and the counts tie), so callers probing k = 1 pass attach = 2.
IncidenceGraph skew_prime_distinguisher(int k, int attach = 0);

struct EnumerationBounds {
    int max_edges = 4;
    int max_vertices = 6;
    bool connected_only = false;
};

// All hypergraphs with 1..max_edges nonempty edge contents over at most
// max_vertices vertices, up to isomorphism. Deterministic order: vertex
// count, then edge count, then canonical form. Hard-capped at 4 edges and
// 7 vertices (BudgetError beyond) since the raw generation space explodes.
std::vector<Hypergraph> enumerate_hypergraphs(const EnumerationBounds& b);

}  // namespace hgx
