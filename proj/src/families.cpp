#include "hgx/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "hgx/canonical.hpp"
#include "hgx/errors.hpp"

namespace hgx {

Hypergraph example_G() {
    return Hypergraph::make({{"i", {"a", "b"}},
                             {"j", {"b", "c"}},
                             {"k", {"a", "c"}},
                             {"l", {"a", "b", "c"}}});
}

Hypergraph example_H() {
    return Hypergraph::make({{"e", {"u", "v", "x"}},
                             {"f", {"v", "w", "z"}},
                             {"g", {"u", "w", "y"}},
                             {"h", {"t", "x", "y", "z"}}});
}

namespace {

EliminationForest make_ef(const std::vector<std::pair<std::string, int>>& nodes,
                          const std::vector<std::string>& gamma,
                          const IncidenceGraph& target) {
    EliminationForest ef;
    for (auto& [name, parent] : nodes) ef.forest.add_node(name, parent);
    for (auto& e : gamma) ef.gamma.push_back(target.blue_index(e).value());
    return ef;
}

}  // namespace

std::vector<NamedForest> fig2_forests() {
    std::vector<NamedForest> out;

    IncidenceGraph ih = to_incidence(example_H());
    out.push_back({"2a", "H",
                   make_ef({{"t1", -1}, {"t2", 0}, {"t3", 0}, {"t4", 0}},
                           {"h", "e", "f", "g"}, ih)});

    IncidenceGraph ig = to_incidence(example_G());
    out.push_back({"2b", "G", make_ef({{"t1", -1}}, {"l"}, ig)});
    out.push_back({"2c", "G",
                   make_ef({{"t1", -1}, {"t2", 0}, {"t3", 0}, {"t4", 0}},
                           {"l", "i", "j", "k"}, ig)});

    // Balanced binary tree over the 15 path edges, rooted at the middle one:
    // the node for edge range [lo, hi] maps its midpoint edge and recurses.
    IncidenceGraph ip = to_incidence(path(15));
    EliminationForest ef;
    auto build = [&](auto&& self, int lo, int hi, int parent) -> void {
        if (lo > hi) return;
        int mid = (lo + hi) / 2;
        int idx = ef.forest.add_node("t" + std::to_string(ef.gamma.size() + 1), parent);
        ef.gamma.push_back(ip.blue_index("e" + std::to_string(mid)).value());
        self(self, lo, mid - 1, idx);
        self(self, mid + 1, hi, idx);
    };
    build(build, 1, 15, -1);
    out.push_back({"2d", "P15", std::move(ef)});
    return out;
}

namespace {

// Cycle with n edges: vertices u1..un, edges c1..cn, ci = {ui, u_{i+1}},
// cn closing back to u1.
std::vector<std::pair<std::string, std::vector<std::string>>> cycle_edges(int n) {
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    for (int i = 1; i <= n; ++i) {
        std::string a = "u" + std::to_string(i);
        std::string b = "u" + std::to_string(i % n + 1);
        edges.push_back({"c" + std::to_string(i), {a, b}});
    }
    return edges;
}

}  // namespace

std::pair<Hypergraph, Hypergraph> skew_pair(int k) {
    if (k < 1) throw std::invalid_argument("skew_pair: k must be >= 1");
    int n = (k == 1) ? 4 : (1 << (k + 1)) + 2;
    auto base = cycle_edges(n);
    // Singletons at distance 2^k resp. 2^k + 1 along the cycle. For k = 1
    // that is the adjacent pair (u1, u2) vs. the diagonal pair (u1, u3).
    int dg = (k == 1) ? 2 : (1 << k) + 1;
    int dh = dg + 1;
    auto g_edges = base;
    g_edges.push_back({"f", {"u1"}});
    g_edges.push_back({"g", {"u" + std::to_string(dg)}});
    auto h_edges = base;
    h_edges.push_back({"f", {"u1"}});
    h_edges.push_back({"g", {"u" + std::to_string(dh)}});
    return {Hypergraph::make(g_edges), Hypergraph::make(h_edges)};
}

Hypergraph skew_distinguisher(int k) {
    if (k < 1) throw std::invalid_argument("skew_distinguisher: k must be >= 1");
    if (k == 1) {
        return Hypergraph::make(
            {{"e1", {"1", "2"}}, {"fp", {"1"}}, {"gp", {"2"}}});
    }
    Hypergraph p = path(1 << k);
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    for (int e = 0; e < p.n_edges(); ++e) {
        std::vector<std::string> content;
        for (int v : p.content[e]) content.push_back(p.vertex_names[v]);
        edges.push_back({p.edge_names[e], content});
    }
    edges.push_back({"fp", {"1"}});
    edges.push_back({"gp", {std::to_string((1 << k) + 1)}});
    return Hypergraph::make(edges);
}

std::pair<Hypergraph, Hypergraph> skew_pair_prime(int k) {
    if (k < 1) throw std::invalid_argument("skew_pair_prime: k must be >= 1");
    int n = (k == 1) ? 4 : (1 << (k + 2)) + 2;
    auto base = cycle_edges(n);
    int dg = (k == 1) ? 2 : (1 << (k + 1)) - 2;
    int dh = dg + 1;
    auto g_edges = base;
    g_edges.push_back({"f", {"u1", "v"}});
    g_edges.push_back({"g", {"u" + std::to_string(dg), "w"}});
    auto h_edges = base;
    h_edges.push_back({"f", {"u1", "v"}});
    h_edges.push_back({"g", {"u" + std::to_string(dh), "w"}});
    return {Hypergraph::make(g_edges), Hypergraph::make(h_edges)};
}

IncidenceGraph skew_prime_distinguisher(int k, int attach) {
    if (k < 1)
        throw std::invalid_argument("skew_prime_distinguisher: k must be >= 1");
    int len = std::max(1, (1 << (k + 1)) - 3);
    if (attach == 0) attach = (1 << k) - 1;
    if (attach < 1 || attach > len + 1)
        throw std::invalid_argument("skew_prime_distinguisher: bad attach index");
    Hypergraph p = path(len);
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    for (int e = 0; e < p.n_edges(); ++e) {
        std::vector<std::string> content;
        for (int v : p.content[e]) content.push_back(p.vertex_names[v]);
        edges.push_back({p.edge_names[e], content});
    }
    edges.push_back({"fp", {"1"}});
    edges.push_back({"gp", {std::to_string(attach)}});
    return to_incidence(Hypergraph::make(edges));
}

std::vector<Hypergraph> enumerate_hypergraphs(const EnumerationBounds& b) {
    if (b.max_edges < 1 || b.max_vertices < 1)
        throw std::invalid_argument("enumerate_hypergraphs: bounds must be positive");
    if (b.max_edges > 4 || b.max_vertices > 7)
        throw BudgetError("enumerate_hypergraphs: bounds exceed the enumeration cap");

    int m = b.max_vertices;
    std::vector<unsigned> masks;  // nonempty vertex subsets as bitmasks
    for (unsigned s = 1; s < (1u << m); ++s) masks.push_back(s);

    struct Entry {
        Hypergraph hg;
        std::string canon;
    };
    std::vector<Entry> found;
    std::unordered_set<std::string> seen;

    std::vector<unsigned> pick;
    auto emit = [&]() {
        unsigned uni = 0;
        for (unsigned s : pick) uni |= s;
        // Compact the used vertices to 1..n, keeping bit order.
        std::vector<int> remap(m, -1);
        int n = 0;
        for (int i = 0; i < m; ++i)
            if (uni & (1u << i)) remap[i] = n++;
        std::vector<std::pair<std::string, std::vector<std::string>>> edges;
        for (size_t e = 0; e < pick.size(); ++e) {
            std::vector<std::string> content;
            for (int i = 0; i < m; ++i)
                if (pick[e] & (1u << i))
                    content.push_back(std::to_string(remap[i] + 1));
            edges.push_back({"e" + std::to_string(e + 1), content});
        }
        Hypergraph hg = Hypergraph::make(edges);
        if (b.connected_only && !is_connected(to_incidence(hg))) return;
        std::string canon = canonical_form(hg);
        if (seen.insert(canon).second) found.push_back({std::move(hg), std::move(canon)});
    };

    // Multisets of edge-content masks in nondecreasing order.
    auto rec = [&](auto&& self, size_t from) -> void {
        if (!pick.empty()) emit();
        if (static_cast<int>(pick.size()) == b.max_edges) return;
        for (size_t i = from; i < masks.size(); ++i) {
            pick.push_back(masks[i]);
            self(self, i);
            pick.pop_back();
        }
    };
    rec(rec, 0);

    std::sort(found.begin(), found.end(), [](const Entry& a, const Entry& b) {
        if (a.hg.n_vertices() != b.hg.n_vertices())
            return a.hg.n_vertices() < b.hg.n_vertices();
        if (a.hg.n_edges() != b.hg.n_edges()) return a.hg.n_edges() < b.hg.n_edges();
        return a.canon < b.canon;
    });
    std::vector<Hypergraph> out;
    out.reserve(found.size());
    for (auto& e : found) out.push_back(std::move(e.hg));
    return out;
}

}  // namespace hgx
