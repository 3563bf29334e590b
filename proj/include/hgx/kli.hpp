#pragma once

// k-labeled incidence graphs and the operation algebra on them: label
// changes, glueing (a quotient of the disjoint union identifying equally
// labeled vertices), the transition graphs M_f and transition application.
//
// A k-labeled incidence graph carries three partial maps over an incidence
// graph skeleton: r assigns red labels (arbitrary positive integers) to red
// vertices, b assigns blue labels from [k] to blue vertices, and g guards
// each red label with a blue label. dom(g) = dom(r) always holds; the guard
// is "real" when it points at a labeled blue neighbour of its red vertex.
//
// All operations are pure. Vertex names in glue products are derived
// deterministically from the operand names, so replaying the same operations
// yields byte-identical graphs.

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hgx/hypergraph.hpp"

namespace hgx {

struct KLabeledIncidenceGraph {
    IncidenceGraph skeleton;
    int k = 1;
    std::map<int, int> r;  // red label -> red index, dom(r) = dom(g)
    std::map<int, int> b;  // blue label in [k] -> blue index
    std::map<int, int> g;  // red label -> blue label in [k]
};

// A transition reassigns guards: f is a transition for g iff dom(f) is a
// nonempty subset of dom(g) and every i in dom(g) with g(i) in img(f) is
// itself in dom(f).
using TransitionFn = std::map<int, int>;

// Validating constructor over vertex names. Throws std::invalid_argument on
// label ranges, unknown vertices or dom(g) != dom(r).
KLabeledIncidenceGraph make_kli(IncidenceGraph skeleton, int k,
                                const std::vector<std::pair<int, std::string>>& red_labels,
                                const std::vector<std::pair<int, std::string>>& blue_labels,
                                const std::vector<std::pair<int, int>>& guards);

bool label_free(const KLabeledIncidenceGraph& l);

// Every red label's guard points at a labeled blue adjacent to the red.
bool real_guards(const KLabeledIncidenceGraph& l);

// Label changes. `labels` must be strictly ascending (the <-enumeration of
// the changed set); existing assignments are overwritten. Red labels come
// paired with guard values so dom(g) = dom(r) is never transiently broken.
KLabeledIncidenceGraph set_red_labels(const KLabeledIncidenceGraph& l,
                                      const std::vector<int>& labels,
                                      const std::vector<std::string>& reds,
                                      const std::vector<int>& guards);
KLabeledIncidenceGraph set_blue_labels(const KLabeledIncidenceGraph& l,
                                       const std::vector<int>& labels,
                                       const std::vector<std::string>& blues);

// Label removal keeps the vertices and drops the assignments; removing a red
// label also drops its guard. Removing an unassigned label throws.
KLabeledIncidenceGraph remove_red(const KLabeledIncidenceGraph& l, const std::vector<int>& x_r);
KLabeledIncidenceGraph remove_blue(const KLabeledIncidenceGraph& l, const std::vector<int>& x_b);

// Where each operand vertex ended up in a glue product, by index.
struct MergeMaps {
    std::array<std::vector<int>, 2> red_map;
    std::array<std::vector<int>, 2> blue_map;
};

struct GlueResult {
    KLabeledIncidenceGraph graph;
    MergeMaps maps;
};

// Disjoint union followed by merging vertices that share a label, with the
// label maps of the first operand taking precedence. Guard maps are united
// as g1 over g2; compatibility is not required here (the derivation layer
// enforces it).
GlueResult glue(const KLabeledIncidenceGraph& l1, const KLabeledIncidenceGraph& l2);

// The transition graph: a red v_i per i in dom(f), a blue e_{f(i)} per value,
// one edge each, fully labeled, g = f.
KLabeledIncidenceGraph m_f(const TransitionFn& f, int k);

bool is_transition(const TransitionFn& f, const std::map<int, int>& g);

// The blue labels a transition tears down before gluing in M_f:
// img(g) n img(f) n dom(b), ascending.
std::vector<int> transition_removed_blues(const KLabeledIncidenceGraph& l, const TransitionFn& f);

// Applies f by gluing M_f onto the graph with the labels in
// transition_removed_blues removed; operand 0 of the maps is M_f, operand 1
// the input graph. The plain overload drops the maps.
GlueResult apply_transition_full(const KLabeledIncidenceGraph& l, const TransitionFn& f);
KLabeledIncidenceGraph apply_transition(const KLabeledIncidenceGraph& l, const TransitionFn& f);

}  // namespace hgx
