#pragma once

// Hypergraphs and their bipartite incidence representation.
//
// A hypergraph is a set of named vertices, a set of named hyperedges and a
// content function edge -> multiset-free vertex set. Duplicate contents across
// edges and empty contents are allowed; every vertex must occur in some edge.
// The incidence view has one red vertex per hypergraph vertex, one blue vertex
// per hyperedge and an edge (blue, red) per containment. Every red vertex has
// at least one blue neighbour; blue vertices may be isolated.
//
// Ids are opaque strings externally and dense indices internally. All stored
// index lists are sorted, so iteration order is deterministic everywhere.

#include <optional>
#include <string>
#include <vector>

namespace hgx {

struct Hypergraph {
    std::vector<std::string> vertex_names;          // sorted, unique
    std::vector<std::string> edge_names;            // sorted, unique, disjoint from vertex ids
    std::vector<std::vector<int>> content;          // per edge: sorted vertex indices

    // Builds from (edge id, vertex id list) pairs. Vertex ids are collected
    // from the contents; `declared_vertices`, when nonempty, must equal that
    // union (the format's optional V line). Throws std::invalid_argument on
    // duplicate/colliding ids or stray declared vertices.
    static Hypergraph make(std::vector<std::pair<std::string, std::vector<std::string>>> edges,
                           std::vector<std::string> declared_vertices = {});

    int n_vertices() const { return static_cast<int>(vertex_names.size()); }
    int n_edges() const { return static_cast<int>(edge_names.size()); }

    std::optional<int> vertex_index(const std::string& name) const;
    std::optional<int> edge_index(const std::string& name) const;
};

struct IncidenceGraph {
    std::vector<std::string> red_names;             // sorted, unique
    std::vector<std::string> blue_names;            // sorted, unique, disjoint from red ids
    std::vector<std::vector<int>> content;          // per blue: sorted red indices
    std::vector<std::vector<int>> red_adj;          // per red: sorted blue indices (derived)

    // Throws std::invalid_argument on bad ids or an isolated red vertex.
    static IncidenceGraph make(std::vector<std::string> reds,
                               std::vector<std::pair<std::string, std::vector<std::string>>> blues);

    int n_reds() const { return static_cast<int>(red_names.size()); }
    int n_blues() const { return static_cast<int>(blue_names.size()); }

    std::optional<int> red_index(const std::string& name) const;
    std::optional<int> blue_index(const std::string& name) const;
};

IncidenceGraph to_incidence(const Hypergraph& h);

// Inverse of to_incidence. Rejects incidence graphs with an isolated red
// vertex (cannot arise from IncidenceGraph::make, but can from raw data).
Hypergraph to_hypergraph(const IncidenceGraph& i);

// Restriction of h to the edge subset (by edge name); vertices outside the
// union of the kept contents are dropped.
Hypergraph induced_sub(const Hypergraph& h, const std::vector<std::string>& edge_subset);

// Connected components of the bipartite graph, each as its own incidence
// graph, ordered by their lexicographically smallest contained id.
std::vector<IncidenceGraph> connected_components(const IncidenceGraph& i);

bool is_connected(const IncidenceGraph& i);

// The path hypergraph: vertices 1..n+1, edges e1..en with content {i, i+1}.
// path(0) is the empty hypergraph.
Hypergraph path(int n);

// Adds a fresh vertex to edge `edge`. The fresh id must be unused as both a
// vertex and an edge id.
Hypergraph pump(const Hypergraph& h, const std::string& edge, const std::string& fresh_vertex);

// Identifies u with v, where both lie in `edge`'s content. u disappears from
// every content and from the vertex set; duplicate contents may result.
Hypergraph local_merge(const Hypergraph& h, const std::string& edge,
                       const std::string& u, const std::string& v);

}  // namespace hgx
