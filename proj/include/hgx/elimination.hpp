#pragma once

// Elimination forests over incidence graphs and the two depth measures.
//
// A rooted forest F with a node labelling gamma : nodes -> blues is an
// elimination forest for I when
//   (1) every red of I occurs in the content of some labelled node,
//   (2) every blue's content is covered by the contents along some
//       descending path P(s, t) of F, and
//   (3) nodes whose contents share a red have a lowest common visible
//       ancestor whose root path covers the shared reds.
// The strict variant replaces (1)-(2) by: gamma is a bijection onto blues.
// Roots have level 1; the height of a forest is its maximum level; the empty
// forest has height 0. Depth of I = minimum height of such a forest.

#include <optional>
#include <string>
#include <vector>

#include "hgx/hypergraph.hpp"

namespace hgx {

struct RootedForest {
    std::vector<std::string> node_names;  // insertion order, unique
    std::vector<int> parent;              // -1 for roots

    int n_nodes() const { return static_cast<int>(node_names.size()); }
    int add_node(const std::string& name, int parent_ix);
    std::optional<int> node_index(const std::string& name) const;
    int level(int node) const;  // roots have level 1
    int height() const;         // 0 for the empty forest
    std::vector<int> root_path(int node) const;        // node up to its root
    std::vector<int> children_of(int node) const;
    std::vector<int> roots() const;
};

// Lowest common visible ancestor: the deepest common element of the two root
// paths, if the nodes share a tree.
std::optional<int> lcv(const RootedForest& f, int s, int t);

struct EliminationForest {
    RootedForest forest;
    std::vector<int> gamma;  // per node: blue index into the instance
};

struct Violation {
    std::string condition;  // "vertex-coverage" | "edge-containment" | "shared-heritage" | "bijectivity"
    std::string detail;     // witnessing ids
};

struct Verdict {
    bool ok = true;
    std::vector<Violation> violations;
};

Verdict validate_ef(const IncidenceGraph& i, const EliminationForest& ef);
Verdict validate_strict_ef(const IncidenceGraph& i, const EliminationForest& ef);

struct DepthWitness {
    int depth = 0;
    EliminationForest forest;
};

struct SearchBudget {
    int max_edges = 8;                    // instances with more blues need an explicit widening
    std::int64_t max_states = 50'000'000; // memo table insertions across the recursion
};

// Minimum height over strict elimination forests, with a witness. Exact,
// memoised recursion over (pending edge set, stem content).
DepthWitness shd_exact(const IncidenceGraph& i, const SearchBudget& budget = {});

// Reference answer: all rooted forests on |blues| nodes x all bijections,
// filtered by validate_strict_ef. Only viable for <= 5 blues.
int shd_bruteforce(const IncidenceGraph& i);

// Minimum height over (non-strict) elimination forests with injective gamma,
// with a witness.
DepthWitness hd_exact(const IncidenceGraph& i, const SearchBudget& budget = {});

// Turns any valid elimination forest into a strict one: contracts duplicate
// gamma values upwards, then hangs a fresh leaf for each unmapped blue below
// a minimal covering path segment. Height grows by at most one.
EliminationForest strictify(const IncidenceGraph& i, const EliminationForest& ef);

// Node set P(n) union descendants(n), in level order.
std::vector<int> subtree_with_stem(const RootedForest& f, int node);

}  // namespace hgx
