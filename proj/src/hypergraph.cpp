#include "hgx/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hgx {

namespace {

std::optional<int> find_sorted(const std::vector<std::string>& names, const std::string& name) {
    auto it = std::lower_bound(names.begin(), names.end(), name);
    if (it == names.end() || *it != name) return std::nullopt;
    return static_cast<int>(it - names.begin());
}

void check_disjoint(const std::vector<std::string>& a, const std::vector<std::string>& b,
                    const char* what) {
    std::vector<std::string> inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    if (!inter.empty()) throw std::invalid_argument(std::string(what) + ": id '" + inter.front() + "' used on both sides");
}

}  // namespace

Hypergraph Hypergraph::make(std::vector<std::pair<std::string, std::vector<std::string>>> edges,
                            std::vector<std::string> declared_vertices) {
    std::set<std::string> vset;
    for (auto& [e, vs] : edges)
        for (auto& v : vs) vset.insert(v);

    if (!declared_vertices.empty()) {
        std::set<std::string> declared(declared_vertices.begin(), declared_vertices.end());
        if (declared != vset) {
            for (auto& v : declared)
                if (!vset.count(v))
                    throw std::invalid_argument("declared vertex '" + v + "' occurs in no edge");
            for (auto& v : vset)
                if (!declared.count(v))
                    throw std::invalid_argument("vertex '" + v + "' missing from declaration");
        }
    }

    Hypergraph h;
    h.vertex_names.assign(vset.begin(), vset.end());

    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        if (edges[i].first == edges[i + 1].first)
            throw std::invalid_argument("duplicate edge id '" + edges[i].first + "'");
    for (auto& [e, vs] : edges) h.edge_names.push_back(e);
    check_disjoint(h.vertex_names, h.edge_names, "hypergraph");

    for (auto& [e, vs] : edges) {
        std::set<int> ix;
        for (auto& v : vs) ix.insert(static_cast<int>(*find_sorted(h.vertex_names, v)));
        h.content.emplace_back(ix.begin(), ix.end());
    }
    return h;
}

std::optional<int> Hypergraph::vertex_index(const std::string& name) const {
    return find_sorted(vertex_names, name);
}

std::optional<int> Hypergraph::edge_index(const std::string& name) const {
    return find_sorted(edge_names, name);
}

IncidenceGraph IncidenceGraph::make(std::vector<std::string> reds,
                                    std::vector<std::pair<std::string, std::vector<std::string>>> blues) {
    IncidenceGraph i;
    std::set<std::string> rset(reds.begin(), reds.end());
    if (rset.size() != reds.size()) throw std::invalid_argument("duplicate red id");
    i.red_names.assign(rset.begin(), rset.end());

    std::sort(blues.begin(), blues.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t k = 0; k + 1 < blues.size(); ++k)
        if (blues[k].first == blues[k + 1].first)
            throw std::invalid_argument("duplicate blue id '" + blues[k].first + "'");
    for (auto& [b, rs] : blues) i.blue_names.push_back(b);
    check_disjoint(i.red_names, i.blue_names, "incidence graph");

    i.red_adj.assign(i.red_names.size(), {});
    for (size_t b = 0; b < blues.size(); ++b) {
        std::set<int> ix;
        for (auto& r : blues[b].second) {
            auto ri = find_sorted(i.red_names, r);
            if (!ri) throw std::invalid_argument("unknown red id '" + r + "'");
            ix.insert(*ri);
        }
        i.content.emplace_back(ix.begin(), ix.end());
        for (int r : i.content.back()) i.red_adj[r].push_back(static_cast<int>(b));
    }
    for (size_t r = 0; r < i.red_adj.size(); ++r)
        if (i.red_adj[r].empty())
            throw std::invalid_argument("red vertex '" + i.red_names[r] + "' has no blue neighbour");
    return i;
}

std::optional<int> IncidenceGraph::red_index(const std::string& name) const {
    return find_sorted(red_names, name);
}

std::optional<int> IncidenceGraph::blue_index(const std::string& name) const {
    return find_sorted(blue_names, name);
}

IncidenceGraph to_incidence(const Hypergraph& h) {
    std::vector<std::pair<std::string, std::vector<std::string>>> blues;
    for (int e = 0; e < h.n_edges(); ++e) {
        std::vector<std::string> rs;
        for (int v : h.content[e]) rs.push_back(h.vertex_names[v]);
        blues.emplace_back(h.edge_names[e], std::move(rs));
    }
    return IncidenceGraph::make(h.vertex_names, std::move(blues));
}

Hypergraph to_hypergraph(const IncidenceGraph& i) {
    for (int r = 0; r < i.n_reds(); ++r)
        if (i.red_adj[r].empty())
            throw std::invalid_argument("isolated red vertex '" + i.red_names[r] + "'");
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    for (int b = 0; b < i.n_blues(); ++b) {
        std::vector<std::string> vs;
        for (int r : i.content[b]) vs.push_back(i.red_names[r]);
        edges.emplace_back(i.blue_names[b], std::move(vs));
    }
    return Hypergraph::make(std::move(edges));
}

Hypergraph induced_sub(const Hypergraph& h, const std::vector<std::string>& edge_subset) {
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    std::set<std::string> seen;
    for (auto& e : edge_subset) {
        auto ei = h.edge_index(e);
        if (!ei) throw std::invalid_argument("unknown edge id '" + e + "'");
        if (!seen.insert(e).second) continue;
        std::vector<std::string> vs;
        for (int v : h.content[*ei]) vs.push_back(h.vertex_names[v]);
        edges.emplace_back(e, std::move(vs));
    }
    return Hypergraph::make(std::move(edges));
}

std::vector<IncidenceGraph> connected_components(const IncidenceGraph& i) {
    int nb = i.n_blues();
    // Union-find over blues; reds attach to the component of any neighbour.
    std::vector<int> parent(nb);
    for (int b = 0; b < nb; ++b) parent[b] = b;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int r = 0; r < i.n_reds(); ++r)
        for (size_t k = 1; k < i.red_adj[r].size(); ++k)
            parent[find(i.red_adj[r][k])] = find(i.red_adj[r][0]);

    std::map<int, std::vector<int>> groups;  // root -> blues
    for (int b = 0; b < nb; ++b) groups[find(b)].push_back(b);

    std::vector<std::pair<std::string, IncidenceGraph>> out;
    for (auto& [root, blues] : groups) {
        std::set<int> reds;
        std::vector<std::pair<std::string, std::vector<std::string>>> bl;
        std::string smallest = i.blue_names[blues.front()];
        for (int b : blues) {
            smallest = std::min(smallest, i.blue_names[b]);
            std::vector<std::string> rs;
            for (int r : i.content[b]) {
                rs.push_back(i.red_names[r]);
                reds.insert(r);
            }
            bl.emplace_back(i.blue_names[b], std::move(rs));
        }
        std::vector<std::string> rnames;
        for (int r : reds) {
            rnames.push_back(i.red_names[r]);
            smallest = std::min(smallest, i.red_names[r]);
        }
        out.emplace_back(smallest, IncidenceGraph::make(std::move(rnames), std::move(bl)));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<IncidenceGraph> res;
    for (auto& [k, g] : out) res.push_back(std::move(g));
    return res;
}

bool is_connected(const IncidenceGraph& i) {
    return connected_components(i).size() <= 1;
}

Hypergraph path(int n) {
    if (n < 0) throw std::invalid_argument("path length must be >= 0");
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    for (int k = 1; k <= n; ++k)
        edges.emplace_back("e" + std::to_string(k),
                           std::vector<std::string>{std::to_string(k), std::to_string(k + 1)});
    return Hypergraph::make(std::move(edges));
}

Hypergraph pump(const Hypergraph& h, const std::string& edge, const std::string& fresh_vertex) {
    auto ei = h.edge_index(edge);
    if (!ei) throw std::invalid_argument("unknown edge id '" + edge + "'");
    if (h.vertex_index(fresh_vertex) || h.edge_index(fresh_vertex))
        throw std::invalid_argument("id '" + fresh_vertex + "' is not fresh");
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    for (int e = 0; e < h.n_edges(); ++e) {
        std::vector<std::string> vs;
        for (int v : h.content[e]) vs.push_back(h.vertex_names[v]);
        if (e == *ei) vs.push_back(fresh_vertex);
        edges.emplace_back(h.edge_names[e], std::move(vs));
    }
    return Hypergraph::make(std::move(edges));
}

Hypergraph local_merge(const Hypergraph& h, const std::string& edge,
                       const std::string& u, const std::string& v) {
    auto ei = h.edge_index(edge);
    if (!ei) throw std::invalid_argument("unknown edge id '" + edge + "'");
    auto ui = h.vertex_index(u), vi = h.vertex_index(v);
    if (!ui || !vi) throw std::invalid_argument("unknown vertex id");
    if (u == v) throw std::invalid_argument("local merge needs two distinct vertices");
    auto& c = h.content[*ei];
    if (!std::binary_search(c.begin(), c.end(), *ui) ||
        !std::binary_search(c.begin(), c.end(), *vi))
        throw std::invalid_argument("merged vertices must both lie in '" + edge + "'");
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    for (int e = 0; e < h.n_edges(); ++e) {
        std::vector<std::string> vs;
        for (int w : h.content[e]) vs.push_back(w == *ui ? v : h.vertex_names[w]);
        edges.emplace_back(h.edge_names[e], std::move(vs));
    }
    return Hypergraph::make(std::move(edges));
}

}  // namespace hgx
