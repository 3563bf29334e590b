#pragma once

// Derivations over the k-labeled operation algebra: immutable trees whose
// nodes cache their resulting graph and a cost index, the number of blue
// label removals performed "in series". A derivation with cost i proves its
// result lies in GLI_k^i; GLI^k is GLI_k^k.
//
// The two bridges to elimination forests realise the depth characterisation:
// build_from_strict_ef turns a strict elimination forest of height d into a
// cost-d derivation of a label-free graph with the same skeleton, and
// extract_forest recovers from any derivation a forest over the unlabeled
// blues whose height is bounded by the cost.

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "hgx/elimination.hpp"
#include "hgx/kli.hpp"

namespace hgx {

enum class DerivKind { Base, Glue, Transition, RemoveRed, RemoveBlue };

struct DerivationNode;
using Derivation = std::shared_ptr<const DerivationNode>;

struct DerivationNode {
    DerivKind kind;
    std::vector<Derivation> children;  // none (base), one (unary ops) or two (glue)
    TransitionFn f;                    // transitions only
    std::vector<int> removed;          // removed labels, ascending; for transitions the
                                       // torn-down blue labels img(g) n img(f) n dom(b)
    KLabeledIncidenceGraph result;
    MergeMaps maps;                    // glue and transition nodes only
    int cost = 0;
};

// Rule constructors. Each checks its side conditions and throws
// std::invalid_argument on a violation.
//
//   base:        all reds and blues labeled, real guards; cost 0
//   glue:        compatible guards; cost max of the operands
//   transition:  f a transition for the child's guards; cost + |removed|
//   remove red:  labels assigned; cost unchanged
//   remove blue: labels assigned and unguarded (disjoint from img(g));
//                cost + |removed|
Derivation derive_base(KLabeledIncidenceGraph l);
Derivation derive_glue(Derivation l1, Derivation l2);
Derivation derive_transition(Derivation child, TransitionFn f);
Derivation derive_remove_red(Derivation child, std::vector<int> x_r);
Derivation derive_remove_blue(Derivation child, std::vector<int> x_b);

// Turns a strict elimination forest of height <= k into a derivation of a
// label-free graph whose skeleton is isomorphic to the instance. Leaves
// become fully labeled base graphs over their root path; at each internal
// node every child first loses the red labels private to it and the blue
// label of its own level, then the children are glued left to right; at each
// root the remaining labels are removed. Trees of the forest are combined by
// gluing their label-free results, which is a disjoint union.
Derivation build_from_strict_ef(const IncidenceGraph& instance, const EliminationForest& ef,
                                int k);

// Recovers a forest over the unlabeled blues of the result, of height at
// most the cost: glueing takes disjoint unions, red removals change nothing,
// and every removal of blue labels j_1 < ... < j_l prepends a chain of l new
// nodes above all previous roots, the node for j_1 on top. For a label-free
// result this is a strict elimination forest of the skeleton.
EliminationForest extract_forest(const Derivation& d);

// Replay of the .gli script format, one step per line:
//
//   BASE <name> <hg-file> r={i:v,...} b={j:e,...} g={i:j,...}
//   GLUE <name> <left> <right>
//   TRANS <name> <child> f={i:j,...}
//   RMR <name> <child> {i,...}
//   RMB <name> <child> {j,...}
//
// "#" starts a comment. Relative <hg-file> paths resolve against base_dir.
// k is inferred as the largest blue label mentioned by any step. Failing
// side conditions surface as ParseError with the offending line.
struct GliStep {
    std::string name;
    Derivation d;
};
struct GliReplay {
    int k = 1;
    std::vector<GliStep> steps;
};

GliReplay replay_gli(std::istream& in, const std::string& base_dir);
GliReplay replay_gli_file(const std::string& path);

}  // namespace hgx
