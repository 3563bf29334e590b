#include "hgx/canonical.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "hgx/errors.hpp"

namespace hgx {

namespace {

// 1-WL colour refinement on the bipartite graph. Colours are represented as
// strings built from the full refinement history, so their order is an
// isomorphism invariant and can be compared across instances.
std::vector<std::string> refine_colours(const IncidenceGraph& g) {
    int nr = g.n_reds(), nb = g.n_blues();
    std::vector<std::string> col(nr + nb);  // reds first, then blues
    for (int r = 0; r < nr; ++r) col[r] = "R" + std::to_string(g.red_adj[r].size());
    for (int b = 0; b < nb; ++b) col[nr + b] = "B" + std::to_string(g.content[b].size());

    size_t classes = 0;
    for (;;) {
        std::vector<std::string> next(nr + nb);
        for (int r = 0; r < nr; ++r) {
            std::vector<std::string> nbr;
            for (int b : g.red_adj[r]) nbr.push_back(col[nr + b]);
            std::sort(nbr.begin(), nbr.end());
            std::string s = col[r] + "(";
            for (auto& x : nbr) s += x + ",";
            next[r] = s + ")";
        }
        for (int b = 0; b < nb; ++b) {
            std::vector<std::string> nbr;
            for (int r : g.content[b]) nbr.push_back(col[r]);
            std::sort(nbr.begin(), nbr.end());
            std::string s = col[nr + b] + "(";
            for (auto& x : nbr) s += x + ",";
            next[nr + b] = s + ")";
        }
        std::map<std::string, int> distinct;
        for (auto& s : next) distinct.emplace(s, static_cast<int>(distinct.size()));
        if (distinct.size() == classes) return col;
        classes = distinct.size();
        col = std::move(next);
    }
}

// Encoding of the graph for one fixed blue order: the sorted multiset of red
// signatures, where a red's signature is the set of blue positions containing
// it. This determines the graph up to renaming reds, so comparing encodings
// over all (class-respecting) blue orders decides isomorphism.
using Encoding = std::vector<std::vector<int>>;

Encoding encode(const IncidenceGraph& g, const std::vector<int>& blue_order) {
    std::vector<int> pos(g.n_blues());
    for (size_t p = 0; p < blue_order.size(); ++p) pos[blue_order[p]] = static_cast<int>(p);
    Encoding sigs(g.n_reds());
    for (int r = 0; r < g.n_reds(); ++r) {
        for (int b : g.red_adj[r]) sigs[r].push_back(pos[b]);
        std::sort(sigs[r].begin(), sigs[r].end());
    }
    std::sort(sigs.begin(), sigs.end());
    return sigs;
}

}  // namespace

std::string canonical_form(const IncidenceGraph& g, const CanonicalBudget& budget) {
    int nr = g.n_reds(), nb = g.n_blues();
    auto col = refine_colours(g);

    // Blue classes in invariant (colour string) order; the search permutes
    // blues only within a class.
    std::map<std::string, std::vector<int>> by_colour;
    for (int b = 0; b < nb; ++b) by_colour[col[nr + b]].push_back(b);
    std::vector<std::vector<int>> classes;
    std::int64_t orders = 1;
    for (auto& [c, blues] : by_colour) {
        (void)c;
        classes.push_back(blues);
        for (size_t i = 2; i <= blues.size(); ++i) {
            orders *= static_cast<std::int64_t>(i);
            if (orders > budget.max_orders)
                throw BudgetError("canonical_form: too many symmetric blue orderings");
        }
    }

    std::optional<Encoding> best;
    std::vector<int> order(nb);
    std::vector<std::vector<int>> perm = classes;  // odometer over within-class perms
    std::int64_t explored = 0;
    for (;;) {
        int at = 0;
        for (auto& cl : perm)
            for (int b : cl) order[at++] = b;
        auto enc = encode(g, order);
        if (!best || enc < *best) best = std::move(enc);
        if (++explored > budget.max_orders)
            throw BudgetError("canonical_form: too many symmetric blue orderings");
        int i = static_cast<int>(perm.size()) - 1;
        while (i >= 0 && !std::next_permutation(perm[i].begin(), perm[i].end())) --i;
        if (i < 0) break;
    }

    std::ostringstream os;
    os << "R" << nr << " B" << nb;
    for (auto& sig : *best) {
        os << "|";
        for (size_t k = 0; k < sig.size(); ++k) os << (k ? "," : "") << sig[k];
    }
    return os.str();
}

bool isomorphic(const IncidenceGraph& a, const IncidenceGraph& b, const CanonicalBudget& budget) {
    if (a.n_reds() != b.n_reds() || a.n_blues() != b.n_blues()) return false;
    auto degrees = [](const IncidenceGraph& g) {
        std::vector<size_t> rd, bd;
        for (auto& adj : g.red_adj) rd.push_back(adj.size());
        for (auto& c : g.content) bd.push_back(c.size());
        std::sort(rd.begin(), rd.end());
        std::sort(bd.begin(), bd.end());
        return std::pair(rd, bd);
    };
    if (degrees(a) != degrees(b)) return false;
    return canonical_form(a, budget) == canonical_form(b, budget);
}

std::string canonical_form(const Hypergraph& h, const CanonicalBudget& budget) {
    return canonical_form(to_incidence(h), budget);
}

}  // namespace hgx
