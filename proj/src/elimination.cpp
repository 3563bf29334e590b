#include "hgx/elimination.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "hgx/errors.hpp"

namespace hgx {

int RootedForest::add_node(const std::string& name, int parent_ix) {
    if (node_index(name)) throw std::invalid_argument("duplicate node id '" + name + "'");
    if (parent_ix < -1 || parent_ix >= n_nodes()) throw std::invalid_argument("bad parent index");
    node_names.push_back(name);
    parent.push_back(parent_ix);
    return n_nodes() - 1;
}

std::optional<int> RootedForest::node_index(const std::string& name) const {
    for (int i = 0; i < n_nodes(); ++i)
        if (node_names[i] == name) return i;
    return std::nullopt;
}

int RootedForest::level(int node) const {
    int l = 0;
    for (int at = node; at != -1; at = parent[at]) ++l;
    return l;
}

int RootedForest::height() const {
    int h = 0;
    for (int i = 0; i < n_nodes(); ++i) h = std::max(h, level(i));
    return h;
}

std::vector<int> RootedForest::root_path(int node) const {
    std::vector<int> p;
    for (int at = node; at != -1; at = parent[at]) p.push_back(at);
    std::reverse(p.begin(), p.end());
    return p;
}

std::vector<int> RootedForest::children_of(int node) const {
    std::vector<int> c;
    for (int i = 0; i < n_nodes(); ++i)
        if (parent[i] == node) c.push_back(i);
    return c;
}

std::vector<int> RootedForest::roots() const {
    std::vector<int> r;
    for (int i = 0; i < n_nodes(); ++i)
        if (parent[i] == -1) r.push_back(i);
    return r;
}

std::optional<int> lcv(const RootedForest& f, int s, int t) {
    auto ps = f.root_path(s), pt = f.root_path(t);
    std::optional<int> deepest;
    for (size_t i = 0; i < ps.size() && i < pt.size() && ps[i] == pt[i]; ++i) deepest = ps[i];
    return deepest;
}

std::vector<int> subtree_with_stem(const RootedForest& f, int node) {
    if (node < 0 || node >= f.n_nodes()) throw std::invalid_argument("bad node index");
    std::vector<char> keep(f.n_nodes(), 0);
    for (int at = node; at != -1; at = f.parent[at]) keep[at] = 1;
    // descendants: repeatedly add children of kept nodes below `node`
    std::vector<int> stack{node};
    while (!stack.empty()) {
        int n = stack.back();
        stack.pop_back();
        for (int c : f.children_of(n)) {
            keep[c] = 1;
            stack.push_back(c);
        }
    }
    std::vector<int> out;
    for (int i = 0; i < f.n_nodes(); ++i)
        if (keep[i]) out.push_back(i);
    std::sort(out.begin(), out.end(), [&](int a, int b) {
        int la = f.level(a), lb = f.level(b);
        return la != lb ? la < lb : a < b;
    });
    return out;
}

namespace {

void check_ef_shape(const IncidenceGraph& i, const EliminationForest& ef) {
    if (static_cast<int>(ef.gamma.size()) != ef.forest.n_nodes())
        throw std::invalid_argument("gamma size does not match node count");
    for (int g : ef.gamma)
        if (g < 0 || g >= i.n_blues()) throw std::invalid_argument("gamma points at a missing blue");
}

// Content union along the root path of each node.
std::vector<std::vector<char>> path_contents(const IncidenceGraph& i, const EliminationForest& ef) {
    std::vector<std::vector<char>> pc(ef.forest.n_nodes(), std::vector<char>(i.n_reds(), 0));
    // process in level order so parents are ready
    std::vector<int> order(ef.forest.n_nodes());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return ef.forest.level(a) < ef.forest.level(b); });
    for (int n : order) {
        if (ef.forest.parent[n] != -1) pc[n] = pc[ef.forest.parent[n]];
        for (int r : i.content[ef.gamma[n]]) pc[n][r] = 1;
    }
    return pc;
}

Verdict check_shared_heritage(const IncidenceGraph& i, const EliminationForest& ef,
                              const std::vector<std::vector<char>>& pc) {
    Verdict v;
    int n = ef.forest.n_nodes();
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            std::vector<int> shared;
            std::set_intersection(i.content[ef.gamma[s]].begin(), i.content[ef.gamma[s]].end(),
                                  i.content[ef.gamma[t]].begin(), i.content[ef.gamma[t]].end(),
                                  std::back_inserter(shared));
            if (shared.empty()) continue;
            auto l = lcv(ef.forest, s, t);
            if (!l) {
                v.ok = false;
                v.violations.push_back({"shared-heritage",
                                        "nodes " + ef.forest.node_names[s] + " and " +
                                            ef.forest.node_names[t] + " share red '" +
                                            i.red_names[shared.front()] + "' across trees"});
                continue;
            }
            for (int r : shared)
                if (!pc[*l][r]) {
                    v.ok = false;
                    v.violations.push_back({"shared-heritage",
                                            "red '" + i.red_names[r] + "' shared by " +
                                                ef.forest.node_names[s] + " and " +
                                                ef.forest.node_names[t] +
                                                " is not covered above " +
                                                ef.forest.node_names[*l]});
                    break;
                }
        }
    return v;
}

}  // namespace

Verdict validate_ef(const IncidenceGraph& i, const EliminationForest& ef) {
    check_ef_shape(i, ef);
    auto pc = path_contents(i, ef);
    Verdict v;

    std::vector<char> covered(i.n_reds(), 0);
    for (int g : ef.gamma)
        for (int r : i.content[g]) covered[r] = 1;
    for (int r = 0; r < i.n_reds(); ++r)
        if (!covered[r]) {
            v.ok = false;
            v.violations.push_back({"vertex-coverage", "red '" + i.red_names[r] + "' occurs in no node content"});
        }

    // A blue is covered iff some full root path's content contains it; a
    // descending segment covering it extends to the root path of its lower end.
    for (int b = 0; b < i.n_blues(); ++b) {
        bool ok = false;
        for (int n = 0; n < ef.forest.n_nodes() && !ok; ++n) {
            ok = true;
            for (int r : i.content[b]) ok = ok && pc[n][r];
        }
        if (!ok) {
            v.ok = false;
            v.violations.push_back({"edge-containment", "blue '" + i.blue_names[b] + "' is covered by no descending path"});
        }
    }

    auto h = check_shared_heritage(i, ef, pc);
    v.ok = v.ok && h.ok;
    for (auto& viol : h.violations) v.violations.push_back(viol);
    return v;
}

Verdict validate_strict_ef(const IncidenceGraph& i, const EliminationForest& ef) {
    check_ef_shape(i, ef);
    Verdict v;
    std::vector<int> times(i.n_blues(), 0);
    for (int g : ef.gamma) ++times[g];
    for (int b = 0; b < i.n_blues(); ++b)
        if (times[b] != 1) {
            v.ok = false;
            v.violations.push_back({"bijectivity", "blue '" + i.blue_names[b] + "' is mapped " +
                                                       std::to_string(times[b]) + " times"});
        }
    auto pc = path_contents(i, ef);
    auto h = check_shared_heritage(i, ef, pc);
    v.ok = v.ok && h.ok;
    for (auto& viol : h.violations) v.violations.push_back(viol);
    return v;
}

namespace {

using Mask = std::uint64_t;

struct DepthCtx {
    const IncidenceGraph& I;
    SearchBudget budget;
    std::vector<Mask> beta;       // per blue: red mask
    std::vector<Mask> red_blues;  // per red: blue mask
    std::unordered_map<Mask, std::unordered_map<Mask, int>> memo;
    std::int64_t states = 0;

    explicit DepthCtx(const IncidenceGraph& i, const SearchBudget& b) : I(i), budget(b) {
        if (i.n_blues() > b.max_edges)
            throw BudgetError("depth search: " + std::to_string(i.n_blues()) +
                              " blues exceed the edge budget of " + std::to_string(b.max_edges));
        if (i.n_blues() > 64 || i.n_reds() > 64)
            throw BudgetError("depth search: instances beyond 64 reds/blues are unsupported");
        beta.resize(i.n_blues());
        red_blues.resize(i.n_reds());
        for (int bl = 0; bl < i.n_blues(); ++bl)
            for (int r : i.content[bl]) {
                beta[bl] |= Mask(1) << r;
                red_blues[r] |= Mask(1) << bl;
            }
    }

    Mask vertices_of(Mask s) const {
        Mask v = 0;
        for (Mask m = s; m;) {
            int b = std::countr_zero(m);
            m &= m - 1;
            v |= beta[b];
        }
        return v;
    }

    int& memo_slot(Mask s, Mask a) {
        auto& inner = memo[s];
        auto [it, fresh] = inner.try_emplace(a, -1);
        if (fresh && ++states > budget.max_states)
            throw BudgetError("depth search: state budget exhausted");
        return it->second;
    }
};

// Classes of the transitive closure of "share a red outside A", ordered by
// lowest blue index.
std::vector<Mask> split_classes(const DepthCtx& c, Mask s, Mask a) {
    std::array<int, 64> uf;
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (Mask m = s; m;) {
        int b = std::countr_zero(m);
        m &= m - 1;
        uf[b] = b;
    }
    for (int r = 0; r < c.I.n_reds(); ++r) {
        if ((a >> r) & 1) continue;
        Mask m = c.red_blues[r] & s;
        if (!m) continue;
        int first = std::countr_zero(m);
        for (Mask rest = m & (m - 1); rest;) {
            int b = std::countr_zero(rest);
            rest &= rest - 1;
            uf[find(b)] = find(first);
        }
    }
    std::map<int, Mask> groups;
    for (Mask m = s; m;) {
        int b = std::countr_zero(m);
        m &= m - 1;
        groups[find(b)] |= Mask(1) << b;
    }
    std::vector<std::pair<int, Mask>> ordered;
    for (auto& [root, mask] : groups) ordered.emplace_back(std::countr_zero(mask), mask);
    std::sort(ordered.begin(), ordered.end());
    std::vector<Mask> out;
    for (auto& [k, mask] : ordered) out.push_back(mask);
    return out;
}

int shd_rec(DepthCtx& c, Mask s, Mask a) {
    if (!s) return 0;
    a &= c.vertices_of(s);
    int& slot = c.memo_slot(s, a);
    if (slot >= 0) return slot;
    slot = c.I.n_blues() + 1;  // placeholder above any achievable height
    int best = slot;
    for (Mask m = s; m;) {
        int b = std::countr_zero(m);
        m &= m - 1;
        Mask a2 = a | c.beta[b];
        int worst = 0;
        for (Mask cl : split_classes(c, s & ~(Mask(1) << b), a2))
            worst = std::max(worst, shd_rec(c, cl, a2));
        best = std::min(best, 1 + worst);
        if (best == 1) break;
    }
    return c.memo_slot(s, a) = best;
}

void shd_build(DepthCtx& c, Mask s, Mask a, int parent, int& counter, EliminationForest& out) {
    if (!s) return;
    a &= c.vertices_of(s);
    int want = shd_rec(c, s, a);
    for (Mask m = s; m;) {
        int b = std::countr_zero(m);
        m &= m - 1;
        Mask a2 = a | c.beta[b];
        auto classes = split_classes(c, s & ~(Mask(1) << b), a2);
        int worst = 0;
        for (Mask cl : classes) worst = std::max(worst, shd_rec(c, cl, a2));
        if (1 + worst != want) continue;
        int node = out.forest.add_node("t" + std::to_string(++counter), parent);
        out.gamma.push_back(b);
        for (Mask cl : classes) shd_build(c, cl, a2, node, counter, out);
        return;
    }
    throw std::logic_error("witness reconstruction lost the optimum");
}

// Pending edges whose content already lies in the stem drop out (they are
// covered by the path built so far); gamma stays injective on the rest.
Mask hd_pending(const DepthCtx& c, Mask s, Mask a) {
    Mask out = 0;
    for (Mask m = s; m;) {
        int b = std::countr_zero(m);
        m &= m - 1;
        if (c.beta[b] & ~a) out |= Mask(1) << b;
    }
    return out;
}

int hd_rec(DepthCtx& c, Mask s, Mask a) {
    s = hd_pending(c, s, a);
    if (!s) return 0;
    a &= c.vertices_of(s);
    int& slot = c.memo_slot(s, a);
    if (slot >= 0) return slot;
    slot = c.I.n_blues() + 1;
    int best = slot;
    for (Mask m = s; m;) {
        int b = std::countr_zero(m);
        m &= m - 1;
        Mask a2 = a | c.beta[b];
        int worst = 0;
        for (Mask cl : split_classes(c, hd_pending(c, s & ~(Mask(1) << b), a2), a2))
            worst = std::max(worst, hd_rec(c, cl, a2));
        best = std::min(best, 1 + worst);
        if (best == 1) break;
    }
    return c.memo_slot(s, a) = best;
}

void hd_build(DepthCtx& c, Mask s, Mask a, int parent, int& counter, EliminationForest& out) {
    s = hd_pending(c, s, a);
    if (!s) return;
    a &= c.vertices_of(s);
    int want = hd_rec(c, s, a);
    for (Mask m = s; m;) {
        int b = std::countr_zero(m);
        m &= m - 1;
        Mask a2 = a | c.beta[b];
        auto classes = split_classes(c, hd_pending(c, s & ~(Mask(1) << b), a2), a2);
        int worst = 0;
        for (Mask cl : classes) worst = std::max(worst, hd_rec(c, cl, a2));
        if (1 + worst != want) continue;
        int node = out.forest.add_node("t" + std::to_string(++counter), parent);
        out.gamma.push_back(b);
        for (Mask cl : classes) hd_build(c, cl, a2, node, counter, out);
        return;
    }
    throw std::logic_error("witness reconstruction lost the optimum");
}

}  // namespace

DepthWitness shd_exact(const IncidenceGraph& i, const SearchBudget& budget) {
    DepthCtx c(i, budget);
    Mask all = i.n_blues() == 64 ? ~Mask(0) : (Mask(1) << i.n_blues()) - 1;
    DepthWitness w;
    int counter = 0;
    for (Mask cl : split_classes(c, all, 0)) {
        w.depth = std::max(w.depth, shd_rec(c, cl, 0));
        shd_build(c, cl, 0, -1, counter, w.forest);
    }
    return w;
}

DepthWitness hd_exact(const IncidenceGraph& i, const SearchBudget& budget) {
    DepthCtx c(i, budget);
    Mask all = i.n_blues() == 64 ? ~Mask(0) : (Mask(1) << i.n_blues()) - 1;
    DepthWitness w;
    int counter = 0;
    for (Mask cl : split_classes(c, all, 0)) {
        w.depth = std::max(w.depth, hd_rec(c, cl, 0));
        hd_build(c, cl, 0, -1, counter, w.forest);
    }
    if (i.n_blues() > 0 && w.forest.forest.n_nodes() == 0) {
        // only empty-content blues: any single node covers them all
        w.depth = 1;
        w.forest.forest.add_node("t1", -1);
        w.forest.gamma.push_back(0);
    }
    w.depth = i.n_blues() > 0 ? std::max(w.depth, 1) : 0;
    return w;
}

int shd_bruteforce(const IncidenceGraph& i) {
    int n = i.n_blues();
    if (n > 5) throw std::invalid_argument("shd_bruteforce is limited to 5 blues");
    if (n == 0) return 0;
    // Enumerate parent vectors over the blues themselves; an arbitrary
    // (forest, bijection) pair is the relabelling of exactly one of these.
    std::vector<int> parent(n, -1);
    int best = n + 1;
    auto acyclic = [&]() {
        for (int s = 0; s < n; ++s) {
            int steps = 0;
            for (int at = s; at != -1; at = parent[at])
                if (++steps > n) return false;
        }
        return true;
    };
    std::int64_t total = 1;
    for (int k = 0; k < n; ++k) total *= n + 1;
    for (std::int64_t code = 0; code < total; ++code) {
        std::int64_t c = code;
        bool self = false;
        for (int k = 0; k < n; ++k) {
            parent[k] = static_cast<int>(c % (n + 1)) - 1;
            c /= n + 1;
            self = self || parent[k] == k;
        }
        if (self || !acyclic()) continue;
        EliminationForest ef;
        for (int k = 0; k < n; ++k) {
            ef.forest.node_names.push_back("t" + std::to_string(k + 1));
            ef.forest.parent.push_back(parent[k]);
            ef.gamma.push_back(k);
        }
        if (ef.forest.height() < best && validate_strict_ef(i, ef).ok)
            best = ef.forest.height();
    }
    return best;
}

EliminationForest strictify(const IncidenceGraph& i, const EliminationForest& input) {
    if (!validate_ef(i, input).ok)
        throw std::invalid_argument("strictify requires a valid elimination forest");
    EliminationForest ef = input;

    // Phase 1: contract duplicate gamma values into their parents (deepest
    // first); duplicate roots can only share an empty content, so dropping one
    // and promoting its children is safe.
    for (;;) {
        int victim = -1;
        for (int b = 0; b < i.n_blues() && victim == -1; ++b) {
            std::vector<int> nodes;
            for (int n = 0; n < ef.forest.n_nodes(); ++n)
                if (ef.gamma[n] == b) nodes.push_back(n);
            if (nodes.size() < 2) continue;
            std::sort(nodes.begin(), nodes.end(), [&](int x, int y) {
                int lx = ef.forest.level(x), ly = ef.forest.level(y);
                return lx != ly ? lx > ly : x > y;
            });
            victim = nodes.front();
        }
        if (victim == -1) break;
        int target = ef.forest.parent[victim];
        RootedForest next;
        std::vector<int> remap(ef.forest.n_nodes(), -1);
        std::vector<int> next_gamma;
        for (int n = 0; n < ef.forest.n_nodes(); ++n) {
            if (n == victim) continue;
            int p = ef.forest.parent[n];
            if (p == victim) p = target;
            remap[n] = next.n_nodes();
            next.node_names.push_back(ef.forest.node_names[n]);
            next.parent.push_back(p);  // fixed up below
            next_gamma.push_back(ef.gamma[n]);
        }
        for (int n = 0; n < next.n_nodes(); ++n)
            if (next.parent[n] != -1) next.parent[n] = remap[next.parent[n]];
        ef.forest = std::move(next);
        ef.gamma = std::move(next_gamma);
    }

    // Phase 2: each unmapped blue becomes a fresh leaf below the lower end of
    // a shortest descending path segment whose contents cover it. Hanging the
    // leaf under the lower end keeps shared heritage intact: any red it shares
    // with another node is already covered at the relevant fork by condition 3
    // of the input forest. Attachment points are chosen against the original
    // nodes only; letting one fresh leaf cover another would chain them and
    // could grow the height past input height + 1.
    auto fresh_name = [&](int k) {
        for (;; ++k) {
            std::string cand = "s" + std::to_string(k);
            if (!ef.forest.node_index(cand)) return cand;
        }
    };
    int fresh_counter = 1;
    const int n_original = ef.forest.n_nodes();
    for (int b = 0; b < i.n_blues(); ++b) {
        bool mapped = false;
        for (int g : ef.gamma) mapped = mapped || g == b;
        if (mapped) continue;
        int best_len = n_original + 1, best_t = -1;
        for (int t = 0; t < n_original; ++t) {
            auto p = ef.forest.root_path(t);
            // segments ending at t: walk upwards accumulating content
            std::vector<char> seen(i.n_reds(), 0);
            for (int up = static_cast<int>(p.size()) - 1; up >= 0; --up) {
                for (int r : i.content[ef.gamma[p[up]]]) seen[r] = 1;
                bool covers = true;
                for (int r : i.content[b]) covers = covers && seen[r];
                if (covers) {
                    int len = static_cast<int>(p.size()) - up;
                    if (len < best_len) {
                        best_len = len;
                        best_t = t;
                    }
                    break;  // longer segments ending at t are no better
                }
            }
        }
        if (best_t == -1) throw std::logic_error("valid forest lost edge containment");
        std::string name = fresh_name(fresh_counter++);
        ef.forest.add_node(name, best_t);
        ef.gamma.push_back(b);
    }
    return ef;
}

}  // namespace hgx
