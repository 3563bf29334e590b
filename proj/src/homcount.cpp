#include "hgx/homcount.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hgx/canonical.hpp"
#include "hgx/elimination.hpp"
#include "hgx/errors.hpp"
#include "hgx/families.hpp"

namespace hgx {

namespace {

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Backtracks over edge images, narrowing each vertex's candidates to the
// intersection of its edges' target contents, then over vertex images. A
// full assignment is a homomorphism if every edge's image set is onto the
// target content (inclusion holds by construction). The visitor returns
// false to stop; so does this function when stopped.
bool enumerate_hg_homs(
    const Hypergraph& f, const Hypergraph& g,
    const std::function<bool(const std::vector<int>&, const std::vector<int>&)>& visit) {
    int ne = f.n_edges(), nv = f.n_vertices();
    std::vector<int> all(g.n_vertices());
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> he(ne, -1), hv(nv, -1);

    std::function<bool(int, const std::vector<std::vector<int>>&)> vertices =
        [&](int v, const std::vector<std::vector<int>>& allowed) -> bool {
        if (v == nv) {
            for (int e = 0; e < ne; ++e) {
                std::set<int> image;
                for (int w : f.content[e]) image.insert(hv[w]);
                if (image.size() != g.content[he[e]].size()) return true;  // not onto
            }
            return visit(hv, he);
        }
        for (int t : allowed[v]) {
            hv[v] = t;
            if (!vertices(v + 1, allowed)) return false;
        }
        hv[v] = -1;
        return true;
    };

    std::function<bool(int, const std::vector<std::vector<int>>&)> edges =
        [&](int e, const std::vector<std::vector<int>>& allowed) -> bool {
        if (e == ne) return vertices(0, allowed);
        for (int te = 0; te < g.n_edges(); ++te) {
            if (g.content[te].size() > f.content[e].size()) continue;  // cannot be onto
            auto next = allowed;
            bool feasible = true;
            for (int v : f.content[e]) {
                next[v] = intersect(next[v], g.content[te]);
                if (next[v].empty()) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;
            he[e] = te;
            if (!edges(e + 1, next)) return false;
        }
        he[e] = -1;
        return true;
    };

    return edges(0, std::vector<std::vector<int>>(nv, all));
}

// Incidence-graph counting: blue images by backtracking, red images counted
// as the product of the remaining candidate sets. Pins force single images.
Count count_ig_core(const IncidenceGraph& i, const IncidenceGraph& j,
                    const std::map<int, int>& blue_pin, const std::map<int, int>& red_pin) {
    int nb = i.n_blues(), nr = i.n_reds();
    std::vector<int> all(j.n_reds());
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<int>> allowed(nr, all);
    for (auto& [v, t] : red_pin) allowed[v] = {t};

    Count total = 0;
    std::function<void(int, const std::vector<std::vector<int>>&)> rec =
        [&](int b, const std::vector<std::vector<int>>& allowed_here) {
            if (b == nb) {
                Count product = 1;
                for (int v = 0; v < nr; ++v) product *= static_cast<int>(allowed_here[v].size());
                total += product;
                return;
            }
            auto pin = blue_pin.find(b);
            for (int tb = 0; tb < j.n_blues(); ++tb) {
                if (pin != blue_pin.end() && pin->second != tb) continue;
                auto next = allowed_here;
                bool feasible = true;
                for (int v : i.content[b]) {
                    next[v] = intersect(next[v], j.content[tb]);
                    if (next[v].empty()) {
                        feasible = false;
                        break;
                    }
                }
                if (feasible) rec(b + 1, next);
            }
        };
    rec(0, allowed);
    return total;
}

}  // namespace

Count count_hg_homs(const Hypergraph& f, const Hypergraph& g) {
    Count total = 0;
    enumerate_hg_homs(f, g, [&](const std::vector<int>&, const std::vector<int>&) {
        ++total;
        return true;
    });
    return total;
}

Count count_ig_homs(const IncidenceGraph& i, const IncidenceGraph& j) {
    return count_ig_core(i, j, {}, {});
}

Count count_labeled_homs(const KLabeledIncidenceGraph& l, const KLabeledIncidenceGraph& lp) {
    std::map<int, int> blue_pin, red_pin;
    for (auto& [label, e] : l.b) {
        auto it = lp.b.find(label);
        if (it == lp.b.end())
            throw std::invalid_argument("count_labeled_homs: blue label " + std::to_string(label) +
                                        " is unassigned on the target");
        auto [pos, fresh] = blue_pin.emplace(e, it->second);
        if (!fresh && pos->second != it->second) return 0;
    }
    for (auto& [label, v] : l.r) {
        auto it = lp.r.find(label);
        if (it == lp.r.end())
            throw std::invalid_argument("count_labeled_homs: red label " + std::to_string(label) +
                                        " is unassigned on the target");
        auto [pos, fresh] = red_pin.emplace(v, it->second);
        if (!fresh && pos->second != it->second) return 0;
    }
    return count_ig_core(l.skeleton, lp.skeleton, blue_pin, red_pin);
}

std::vector<HomPair> all_hg_homs(const Hypergraph& f, const Hypergraph& g, std::int64_t cap) {
    std::vector<HomPair> out;
    enumerate_hg_homs(f, g, [&](const std::vector<int>& hv, const std::vector<int>& he) {
        if (static_cast<std::int64_t>(out.size()) == cap)
            throw BudgetError("all_hg_homs: more than " + std::to_string(cap) + " homomorphisms");
        out.push_back({hv, he});
        return true;
    });
    return out;
}

bool surjective_hom_exists(const Hypergraph& h, int n) {
    Hypergraph p = path(n);
    if (h.n_vertices() < p.n_vertices() || h.n_edges() < p.n_edges()) return false;
    bool found = false;
    enumerate_hg_homs(h, p, [&](const std::vector<int>& hv, const std::vector<int>& he) {
        std::set<int> vertex_image(hv.begin(), hv.end());
        std::set<int> edge_image(he.begin(), he.end());
        if (static_cast<int>(vertex_image.size()) == p.n_vertices() &&
            static_cast<int>(edge_image.size()) == p.n_edges()) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

std::vector<Hypergraph> truncation_sources(const ClassTruncation& ct) {
    if (ct.kind == TruncationKind::Explicit) {
        std::vector<Hypergraph> out;
        std::set<std::string> seen;
        for (const Hypergraph& h : ct.explicit_sources)
            if (seen.insert(canonical_form(h)).second) out.push_back(h);
        return out;
    }
    if (ct.k < 0 || ct.max_edges < 1 || ct.max_vertices < 1)
        throw std::invalid_argument("truncation_sources: bounds must be positive");
    EnumerationBounds bounds;
    bounds.max_edges = ct.max_edges;
    bounds.max_vertices = ct.max_vertices;
    bounds.connected_only = ct.connected_only;
    bool strict = ct.kind == TruncationKind::Shd || ct.kind == TruncationKind::Ishd;
    std::vector<Hypergraph> out;
    for (Hypergraph& h : enumerate_hypergraphs(bounds)) {
        IncidenceGraph i = to_incidence(h);
        int depth = strict ? shd_exact(i).depth : hd_exact(i).depth;
        if (depth <= ct.k) out.push_back(std::move(h));
    }
    return out;
}

namespace {

void require_hg_kind(const ClassTruncation& ct) {
    if (ct.kind == TruncationKind::Ishd || ct.kind == TruncationKind::Ihd)
        throw std::invalid_argument("incidence-graph class needs an incidence-graph target");
}

void require_ig_kind(const ClassTruncation& ct) {
    if (ct.kind == TruncationKind::Shd || ct.kind == TruncationKind::Hd)
        throw std::invalid_argument("hypergraph class needs a hypergraph target");
}

template <class CountA, class CountB>
IndistVerdict indist_over(const std::vector<Hypergraph>& sources, CountA&& count_a,
                          CountB&& count_b) {
    std::map<std::string, std::pair<Count, Count>> table;
    std::map<std::string, const Hypergraph*> source_of;
    for (const Hypergraph& s : sources) {
        std::string key = canonical_form(s);
        table[key] = {count_a(s), count_b(s)};
        source_of[key] = &s;
    }
    IndistVerdict verdict;
    for (auto& [key, counts] : table) {
        if (counts.first != counts.second) {
            verdict.equal = false;
            verdict.witness = *source_of[key];
            verdict.witness_key = key;
            verdict.count_a = counts.first;
            verdict.count_b = counts.second;
            return verdict;
        }
    }
    return verdict;
}

}  // namespace

HomVector hom_vector(const ClassTruncation& ct, const Hypergraph& target) {
    require_hg_kind(ct);
    HomVector out;
    for (const Hypergraph& src : truncation_sources(ct))
        out.entries[canonical_form(src)] = count_hg_homs(src, target);
    return out;
}

HomVector hom_vector(const ClassTruncation& ct, const IncidenceGraph& target) {
    require_ig_kind(ct);
    HomVector out;
    for (const Hypergraph& src : truncation_sources(ct))
        out.entries[canonical_form(src)] = count_ig_homs(to_incidence(src), target);
    return out;
}

IndistVerdict indistinguishable(const ClassTruncation& ct, const Hypergraph& a,
                                const Hypergraph& b) {
    require_hg_kind(ct);
    return indist_over(
        truncation_sources(ct), [&](const Hypergraph& s) { return count_hg_homs(s, a); },
        [&](const Hypergraph& s) { return count_hg_homs(s, b); });
}

IndistVerdict indistinguishable(const ClassTruncation& ct, const IncidenceGraph& a,
                                const IncidenceGraph& b) {
    require_ig_kind(ct);
    return indist_over(
        truncation_sources(ct),
        [&](const Hypergraph& s) { return count_ig_homs(to_incidence(s), a); },
        [&](const Hypergraph& s) { return count_ig_homs(to_incidence(s), b); });
}

}  // namespace hgx
