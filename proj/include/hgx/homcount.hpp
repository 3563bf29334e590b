#pragma once

// Exact homomorphism counting. A homomorphism is a pair (h_V, h_E); under
// hypergraph semantics the image of each edge's content must equal the
// target content, under incidence-graph semantics it must be included in it.
// Counts are exact big integers.
//
// Hom vectors collect the counts from every source in a truncated depth
// class, keyed and ordered by the sources' canonical forms, so two vectors
// compare entry by entry. A truncated "equal" verdict is evidence up to the
// stated bounds, not a proof.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hgx/hypergraph.hpp"
#include "hgx/kli.hpp"

namespace hgx {

using Count = boost::multiprecision::cpp_int;

struct HomPair {
    std::vector<int> h_v;  // source vertex index -> target vertex index
    std::vector<int> h_e;  // source edge index -> target edge index
};

Count count_hg_homs(const Hypergraph& f, const Hypergraph& g);
Count count_ig_homs(const IncidenceGraph& i, const IncidenceGraph& j);

// Label-respecting count over the skeletons: shared red labels pin red
// images, shared blue labels pin blue images. Requires the source label
// domains to be contained in the target's; guards do not constrain.
Count count_labeled_homs(const KLabeledIncidenceGraph& l, const KLabeledIncidenceGraph& lp);

// Materialises every hypergraph homomorphism; BudgetError past `cap`.
std::vector<HomPair> all_hg_homs(const Hypergraph& f, const Hypergraph& g,
                                 std::int64_t cap = 1'000'000);

// True iff some hypergraph homomorphism from h into the path hypergraph with
// n edges is surjective in both components.
bool surjective_hom_exists(const Hypergraph& h, int n);

// Truncated source classes: instances of strict hypertree depth (Shd) or
// hypertree depth (Hd) at most k, counted under hypergraph semantics, and
// the same instances under incidence-graph semantics (Ishd, Ihd). Explicit
// skips enumeration and uses the given sources.
enum class TruncationKind { Shd, Hd, Ishd, Ihd, Explicit };

struct ClassTruncation {
    TruncationKind kind = TruncationKind::Shd;
    int k = 1;
    int max_edges = 4;
    int max_vertices = 6;
    bool connected_only = false;
    std::vector<Hypergraph> explicit_sources;
};

// The sources of the truncated class, enumerated up to isomorphism within
// the bounds and filtered by the depth predicate; deterministic order.
std::vector<Hypergraph> truncation_sources(const ClassTruncation& ct);

struct HomVector {
    std::map<std::string, Count> entries;  // canonical_form(source) -> count

    bool operator==(const HomVector& other) const { return entries == other.entries; }
};

// The target flavour must match the class kind: hypergraph targets for
// Shd/Hd, incidence targets for Ishd/Ihd; Explicit accepts either.
HomVector hom_vector(const ClassTruncation& ct, const Hypergraph& target);
HomVector hom_vector(const ClassTruncation& ct, const IncidenceGraph& target);

struct IndistVerdict {
    bool equal = true;
    std::optional<Hypergraph> witness;  // first distinguishing source, canonical key order
    std::string witness_key;
    Count count_a, count_b;
};

IndistVerdict indistinguishable(const ClassTruncation& ct, const Hypergraph& a,
                                const Hypergraph& b);
IndistVerdict indistinguishable(const ClassTruncation& ct, const IncidenceGraph& a,
                                const IncidenceGraph& b);

}  // namespace hgx
