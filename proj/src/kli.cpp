#include "hgx/kli.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hgx {

namespace {

void check_label_range(int label, int k, const char* what) {
    if (label < 1) throw std::invalid_argument(std::string(what) + ": labels must be positive");
    if (k >= 0 && label > k)
        throw std::invalid_argument(std::string(what) + ": label " + std::to_string(label) +
                                    " outside [" + std::to_string(k) + "]");
}

bool skeleton_edge(const IncidenceGraph& i, int blue, int red) {
    const auto& c = i.content[blue];
    return std::binary_search(c.begin(), c.end(), red);
}

std::set<int> map_values(const std::map<int, int>& m) {
    std::set<int> out;
    for (auto& [k_, v] : m) out.insert(v);
    return out;
}

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int x, int y) { p[find(x)] = find(y); }
};

}  // namespace

KLabeledIncidenceGraph make_kli(IncidenceGraph skeleton, int k,
                                const std::vector<std::pair<int, std::string>>& red_labels,
                                const std::vector<std::pair<int, std::string>>& blue_labels,
                                const std::vector<std::pair<int, int>>& guards) {
    if (k < 1) throw std::invalid_argument("make_kli: k must be positive");
    KLabeledIncidenceGraph l;
    l.skeleton = std::move(skeleton);
    l.k = k;
    for (auto& [label, name] : red_labels) {
        check_label_range(label, -1, "make_kli red label");
        auto ix = l.skeleton.red_index(name);
        if (!ix) throw std::invalid_argument("make_kli: unknown red vertex " + name);
        if (!l.r.emplace(label, *ix).second)
            throw std::invalid_argument("make_kli: duplicate red label " + std::to_string(label));
    }
    for (auto& [label, name] : blue_labels) {
        check_label_range(label, k, "make_kli blue label");
        auto ix = l.skeleton.blue_index(name);
        if (!ix) throw std::invalid_argument("make_kli: unknown blue vertex " + name);
        if (!l.b.emplace(label, *ix).second)
            throw std::invalid_argument("make_kli: duplicate blue label " + std::to_string(label));
    }
    for (auto& [label, guard] : guards) {
        check_label_range(guard, k, "make_kli guard value");
        if (!l.r.count(label))
            throw std::invalid_argument("make_kli: guard for unassigned red label " +
                                        std::to_string(label));
        if (!l.g.emplace(label, guard).second)
            throw std::invalid_argument("make_kli: duplicate guard " + std::to_string(label));
    }
    if (l.g.size() != l.r.size())
        throw std::invalid_argument("make_kli: every red label needs a guard");
    return l;
}

bool label_free(const KLabeledIncidenceGraph& l) {
    return l.r.empty() && l.b.empty() && l.g.empty();
}

bool real_guards(const KLabeledIncidenceGraph& l) {
    for (auto& [label, red] : l.r) {
        auto git = l.g.find(label);
        if (git == l.g.end()) return false;
        auto bit = l.b.find(git->second);
        if (bit == l.b.end()) return false;
        if (!skeleton_edge(l.skeleton, bit->second, red)) return false;
    }
    return true;
}

KLabeledIncidenceGraph set_red_labels(const KLabeledIncidenceGraph& l,
                                      const std::vector<int>& labels,
                                      const std::vector<std::string>& reds,
                                      const std::vector<int>& guards) {
    if (labels.size() != reds.size() || labels.size() != guards.size())
        throw std::invalid_argument("set_red_labels: label/vertex/guard arity mismatch");
    if (!std::is_sorted(labels.begin(), labels.end(), std::less_equal<int>()))
        throw std::invalid_argument("set_red_labels: labels must be strictly ascending");
    KLabeledIncidenceGraph out = l;
    for (size_t j = 0; j < labels.size(); ++j) {
        check_label_range(labels[j], -1, "set_red_labels");
        check_label_range(guards[j], l.k, "set_red_labels guard");
        auto ix = l.skeleton.red_index(reds[j]);
        if (!ix) throw std::invalid_argument("set_red_labels: unknown red vertex " + reds[j]);
        out.r[labels[j]] = *ix;
        out.g[labels[j]] = guards[j];
    }
    return out;
}

KLabeledIncidenceGraph set_blue_labels(const KLabeledIncidenceGraph& l,
                                       const std::vector<int>& labels,
                                       const std::vector<std::string>& blues) {
    if (labels.size() != blues.size())
        throw std::invalid_argument("set_blue_labels: label/vertex arity mismatch");
    if (!std::is_sorted(labels.begin(), labels.end(), std::less_equal<int>()))
        throw std::invalid_argument("set_blue_labels: labels must be strictly ascending");
    KLabeledIncidenceGraph out = l;
    for (size_t j = 0; j < labels.size(); ++j) {
        check_label_range(labels[j], l.k, "set_blue_labels");
        auto ix = l.skeleton.blue_index(blues[j]);
        if (!ix) throw std::invalid_argument("set_blue_labels: unknown blue vertex " + blues[j]);
        out.b[labels[j]] = *ix;
    }
    return out;
}

KLabeledIncidenceGraph remove_red(const KLabeledIncidenceGraph& l, const std::vector<int>& x_r) {
    KLabeledIncidenceGraph out = l;
    for (int label : std::set<int>(x_r.begin(), x_r.end())) {
        if (!out.r.erase(label))
            throw std::invalid_argument("remove_red: label " + std::to_string(label) +
                                        " is not assigned");
        out.g.erase(label);
    }
    return out;
}

KLabeledIncidenceGraph remove_blue(const KLabeledIncidenceGraph& l, const std::vector<int>& x_b) {
    KLabeledIncidenceGraph out = l;
    for (int label : std::set<int>(x_b.begin(), x_b.end())) {
        if (!out.b.erase(label))
            throw std::invalid_argument("remove_blue: label " + std::to_string(label) +
                                        " is not assigned");
    }
    return out;
}

namespace {

// Partition 0..n-1 into union-find classes, ordered by smallest member.
std::vector<std::vector<int>> dsu_classes(Dsu& d, int n) {
    std::vector<int> class_of(n, -1);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < n; ++x) {
        int root = d.find(x);
        if (class_of[root] < 0) {
            class_of[root] = static_cast<int>(classes.size());
            classes.emplace_back();
        }
        classes[class_of[root]].push_back(x);
    }
    return classes;
}

// Class names: the smallest member name, made unique across the shared
// red/blue namespace with ~2, ~3, ... suffixes in class order.
std::vector<std::string> class_names(const std::vector<std::vector<int>>& classes,
                                     const std::vector<std::string>& member_names,
                                     std::set<std::string>& used) {
    std::vector<std::string> out;
    out.reserve(classes.size());
    for (const auto& cls : classes) {
        std::string base = member_names[cls.front()];
        for (int m : cls) base = std::min(base, member_names[m]);
        std::string name = base;
        for (int suffix = 2; used.count(name); ++suffix)
            name = base + "~" + std::to_string(suffix);
        used.insert(name);
        out.push_back(std::move(name));
    }
    return out;
}

}  // namespace

GlueResult glue(const KLabeledIncidenceGraph& l1, const KLabeledIncidenceGraph& l2) {
    if (l1.k != l2.k) throw std::invalid_argument("glue: operands disagree on k");
    const IncidenceGraph& s1 = l1.skeleton;
    const IncidenceGraph& s2 = l2.skeleton;
    int nr1 = s1.n_reds(), nb1 = s1.n_blues();
    int nr = nr1 + s2.n_reds(), nb = nb1 + s2.n_blues();

    Dsu reds(nr), blues(nb);
    for (auto& [label, v1] : l1.r) {
        auto it = l2.r.find(label);
        if (it != l2.r.end()) reds.unite(v1, nr1 + it->second);
    }
    for (auto& [label, e1] : l1.b) {
        auto it = l2.b.find(label);
        if (it != l2.b.end()) blues.unite(e1, nb1 + it->second);
    }

    auto red_classes = dsu_classes(reds, nr);
    auto blue_classes = dsu_classes(blues, nb);
    std::vector<int> red_class_of(nr), blue_class_of(nb);
    for (size_t c = 0; c < red_classes.size(); ++c)
        for (int m : red_classes[c]) red_class_of[m] = static_cast<int>(c);
    for (size_t c = 0; c < blue_classes.size(); ++c)
        for (int m : blue_classes[c]) blue_class_of[m] = static_cast<int>(c);

    std::vector<std::string> red_member_names(nr), blue_member_names(nb);
    for (int v = 0; v < nr; ++v)
        red_member_names[v] = v < nr1 ? s1.red_names[v] : s2.red_names[v - nr1];
    for (int e = 0; e < nb; ++e)
        blue_member_names[e] = e < nb1 ? s1.blue_names[e] : s2.blue_names[e - nb1];

    std::set<std::string> used;
    auto red_names = class_names(red_classes, red_member_names, used);
    auto blue_names = class_names(blue_classes, blue_member_names, used);

    std::vector<std::pair<std::string, std::vector<std::string>>> blue_spec;
    blue_spec.reserve(blue_classes.size());
    for (size_t c = 0; c < blue_classes.size(); ++c) {
        std::set<std::string> content;
        for (int m : blue_classes[c]) {
            const IncidenceGraph& s = m < nb1 ? s1 : s2;
            int local = m < nb1 ? m : m - nb1;
            int offset = m < nb1 ? 0 : nr1;
            for (int v : s.content[local]) content.insert(red_names[red_class_of[v + offset]]);
        }
        blue_spec.push_back({blue_names[c], {content.begin(), content.end()}});
    }

    GlueResult out;
    out.graph.skeleton = IncidenceGraph::make(red_names, blue_spec);
    out.graph.k = l1.k;

    auto red_product_ix = [&](int flat) {
        return out.graph.skeleton.red_index(red_names[red_class_of[flat]]).value();
    };
    auto blue_product_ix = [&](int flat) {
        return out.graph.skeleton.blue_index(blue_names[blue_class_of[flat]]).value();
    };
    out.maps.red_map[0].resize(nr1);
    out.maps.red_map[1].resize(nr - nr1);
    for (int v = 0; v < nr; ++v)
        (v < nr1 ? out.maps.red_map[0][v] : out.maps.red_map[1][v - nr1]) = red_product_ix(v);
    out.maps.blue_map[0].resize(nb1);
    out.maps.blue_map[1].resize(nb - nb1);
    for (int e = 0; e < nb; ++e)
        (e < nb1 ? out.maps.blue_map[0][e] : out.maps.blue_map[1][e - nb1]) = blue_product_ix(e);

    for (auto& [label, v] : l1.r) out.graph.r[label] = out.maps.red_map[0][v];
    for (auto& [label, v] : l2.r) out.graph.r.emplace(label, out.maps.red_map[1][v]);
    for (auto& [label, e] : l1.b) out.graph.b[label] = out.maps.blue_map[0][e];
    for (auto& [label, e] : l2.b) out.graph.b.emplace(label, out.maps.blue_map[1][e]);
    out.graph.g = l1.g;
    for (auto& [label, guard] : l2.g) out.graph.g.emplace(label, guard);
    return out;
}

KLabeledIncidenceGraph m_f(const TransitionFn& f, int k) {
    if (f.empty()) throw std::invalid_argument("m_f: dom(f) must be nonempty");
    std::vector<std::string> reds;
    std::set<int> values;
    for (auto& [i, j] : f) {
        check_label_range(i, -1, "m_f red label");
        check_label_range(j, k, "m_f blue label");
        reds.push_back("v" + std::to_string(i));
        values.insert(j);
    }
    std::vector<std::pair<std::string, std::vector<std::string>>> blue_spec;
    for (int j : values) {
        std::vector<std::string> content;
        for (auto& [i, ji] : f)
            if (ji == j) content.push_back("v" + std::to_string(i));
        blue_spec.push_back({"e" + std::to_string(j), std::move(content)});
    }
    KLabeledIncidenceGraph l;
    l.skeleton = IncidenceGraph::make(std::move(reds), std::move(blue_spec));
    l.k = k;
    for (auto& [i, j] : f) {
        l.r[i] = l.skeleton.red_index("v" + std::to_string(i)).value();
        l.g[i] = j;
    }
    for (int j : values) l.b[j] = l.skeleton.blue_index("e" + std::to_string(j)).value();
    return l;
}

bool is_transition(const TransitionFn& f, const std::map<int, int>& g) {
    if (f.empty()) return false;
    for (auto& [i, j] : f)
        if (!g.count(i)) return false;
    std::set<int> img_f = map_values(f);
    for (auto& [i, guard] : g)
        if (img_f.count(guard) && !f.count(i)) return false;
    return true;
}

std::vector<int> transition_removed_blues(const KLabeledIncidenceGraph& l, const TransitionFn& f) {
    std::set<int> img_g = map_values(l.g);
    std::vector<int> x_b;
    for (int j : map_values(f))
        if (img_g.count(j) && l.b.count(j)) x_b.push_back(j);
    return x_b;
}

GlueResult apply_transition_full(const KLabeledIncidenceGraph& l, const TransitionFn& f) {
    if (!is_transition(f, l.g)) throw std::invalid_argument("apply_transition: not a transition");
    return glue(m_f(f, l.k), remove_blue(l, transition_removed_blues(l, f)));
}

KLabeledIncidenceGraph apply_transition(const KLabeledIncidenceGraph& l, const TransitionFn& f) {
    return apply_transition_full(l, f).graph;
}

}  // namespace hgx
