#include "hgx/derivation.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hgx/errors.hpp"
#include "hgx/io.hpp"

namespace hgx {

namespace {

std::set<int> map_values(const std::map<int, int>& m) {
    std::set<int> out;
    for (auto& [k, v] : m) out.insert(v);
    return out;
}

void check_compatible(const std::map<int, int>& g1, const std::map<int, int>& g2,
                      const char* what) {
    for (auto& [label, value] : g1) {
        auto it = g2.find(label);
        if (it != g2.end() && it->second != value)
            throw std::invalid_argument(std::string(what) + ": guard functions disagree on label " +
                                        std::to_string(label));
    }
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

Derivation derive_base(KLabeledIncidenceGraph l) {
    std::vector<bool> red_hit(l.skeleton.n_reds(), false);
    std::vector<bool> blue_hit(l.skeleton.n_blues(), false);
    for (auto& [label, v] : l.r) red_hit[v] = true;
    for (auto& [label, e] : l.b) blue_hit[e] = true;
    if (std::find(red_hit.begin(), red_hit.end(), false) != red_hit.end())
        throw std::invalid_argument("derive_base: every red vertex must carry a label");
    if (std::find(blue_hit.begin(), blue_hit.end(), false) != blue_hit.end())
        throw std::invalid_argument("derive_base: every blue vertex must carry a label");
    if (!real_guards(l)) throw std::invalid_argument("derive_base: guards must be real");
    auto node = std::make_shared<DerivationNode>();
    node->kind = DerivKind::Base;
    node->result = std::move(l);
    node->cost = 0;
    return node;
}

Derivation derive_glue(Derivation l1, Derivation l2) {
    check_compatible(l1->result.g, l2->result.g, "derive_glue");
    auto node = std::make_shared<DerivationNode>();
    node->kind = DerivKind::Glue;
    GlueResult glued = glue(l1->result, l2->result);
    node->result = std::move(glued.graph);
    node->maps = std::move(glued.maps);
    node->cost = std::max(l1->cost, l2->cost);
    node->children = {std::move(l1), std::move(l2)};
    return node;
}

Derivation derive_transition(Derivation child, TransitionFn f) {
    auto node = std::make_shared<DerivationNode>();
    node->kind = DerivKind::Transition;
    GlueResult glued = apply_transition_full(child->result, f);
    node->removed = transition_removed_blues(child->result, f);
    node->result = std::move(glued.graph);
    node->maps = std::move(glued.maps);
    node->cost = child->cost + static_cast<int>(node->removed.size());
    node->f = std::move(f);
    node->children = {std::move(child)};
    return node;
}

Derivation derive_remove_red(Derivation child, std::vector<int> x_r) {
    auto node = std::make_shared<DerivationNode>();
    node->kind = DerivKind::RemoveRed;
    node->result = remove_red(child->result, x_r);
    node->removed = sorted_unique(std::move(x_r));
    node->cost = child->cost;
    node->children = {std::move(child)};
    return node;
}

Derivation derive_remove_blue(Derivation child, std::vector<int> x_b) {
    std::set<int> guarded = map_values(child->result.g);
    for (int label : x_b)
        if (guarded.count(label))
            throw std::invalid_argument("derive_remove_blue: label " + std::to_string(label) +
                                        " is still a guard");
    auto node = std::make_shared<DerivationNode>();
    node->kind = DerivKind::RemoveBlue;
    node->result = remove_blue(child->result, x_b);
    node->removed = sorted_unique(std::move(x_b));
    node->cost = child->cost + static_cast<int>(node->removed.size());
    node->children = {std::move(child)};
    return node;
}

namespace {

struct EfBuilder {
    const IncidenceGraph& j;
    const EliminationForest& ef;
    int k;
    Hypergraph h;

    // Red labels are positions in the instance's red enumeration, 1-based.
    std::vector<int> node_labels(int node) const {
        std::vector<int> out;
        for (int v : j.content[ef.gamma[node]]) out.push_back(v + 1);
        return out;
    }

    const std::string& node_edge(int node) const { return j.blue_names[ef.gamma[node]]; }

    Derivation leaf(const std::vector<int>& stem) {
        std::vector<std::string> edges;
        edges.reserve(stem.size());
        for (int t : stem) edges.push_back(node_edge(t));
        IncidenceGraph skeleton = to_incidence(induced_sub(h, edges));

        std::map<int, int> guard;  // red label -> first stem level carrying it
        for (size_t d = 0; d < stem.size(); ++d)
            for (int label : node_labels(stem[d])) guard.emplace(label, static_cast<int>(d) + 1);

        std::vector<std::pair<int, std::string>> red_labels;
        for (auto& [label, first] : guard) red_labels.push_back({label, j.red_names[label - 1]});
        std::vector<std::pair<int, std::string>> blue_labels;
        for (size_t d = 0; d < stem.size(); ++d)
            blue_labels.push_back({static_cast<int>(d) + 1, node_edge(stem[d])});
        return derive_base(make_kli(std::move(skeleton), k, red_labels, blue_labels,
                                    {guard.begin(), guard.end()}));
    }

    Derivation build(int node, std::vector<int>& stem) {
        auto kids = ef.forest.children_of(node);
        if (kids.empty()) return leaf(stem);
        int d = static_cast<int>(stem.size());
        std::set<int> stem_labels;
        for (int t : stem)
            for (int label : node_labels(t)) stem_labels.insert(label);
        Derivation acc;
        for (int c : kids) {
            stem.push_back(c);
            Derivation sub = build(c, stem);
            stem.pop_back();
            std::vector<int> x_r;
            for (int label : node_labels(c))
                if (!stem_labels.count(label)) x_r.push_back(label);
            Derivation trimmed =
                derive_remove_blue(derive_remove_red(std::move(sub), std::move(x_r)), {d + 1});
            acc = acc ? derive_glue(std::move(acc), std::move(trimmed)) : std::move(trimmed);
        }
        return acc;
    }
};

}  // namespace

Derivation build_from_strict_ef(const IncidenceGraph& instance, const EliminationForest& ef,
                                int k) {
    Verdict verdict = validate_strict_ef(instance, ef);
    if (!verdict.ok)
        throw std::invalid_argument("build_from_strict_ef: not a strict elimination forest" +
                                    (verdict.violations.empty()
                                         ? std::string()
                                         : " (" + verdict.violations.front().detail + ")"));
    if (k < 1 || k < ef.forest.height())
        throw std::invalid_argument("build_from_strict_ef: k is smaller than the forest height");
    if (instance.n_blues() == 0) {
        KLabeledIncidenceGraph empty;
        empty.skeleton = IncidenceGraph::make({}, {});
        empty.k = k;
        return derive_base(std::move(empty));
    }
    EfBuilder builder{instance, ef, k, to_hypergraph(instance)};
    Derivation acc;
    for (int root : ef.forest.roots()) {
        std::vector<int> stem{root};
        Derivation tree = builder.build(root, stem);
        tree = derive_remove_blue(derive_remove_red(std::move(tree), builder.node_labels(root)),
                                  {1});
        acc = acc ? derive_glue(std::move(acc), std::move(tree)) : std::move(tree);
    }
    return acc;
}

namespace {

// Appends every node of `src`, renumbered and shifted by `offset` parents;
// roots of `src` are attached below `attach` (-1 keeps them roots).
void append_forest(EliminationForest& out, const RootedForest& src, int offset, int attach) {
    for (int ix = 0; ix < src.n_nodes(); ++ix) {
        int parent = src.parent[ix] < 0 ? attach : src.parent[ix] + offset;
        out.forest.add_node("n" + std::to_string(out.forest.n_nodes() + 1), parent);
    }
}

EliminationForest extract(const DerivationNode& node) {
    switch (node.kind) {
        case DerivKind::Base:
            return {};
        case DerivKind::Glue: {
            EliminationForest left = extract(*node.children[0]);
            EliminationForest right = extract(*node.children[1]);
            EliminationForest out;
            append_forest(out, left.forest, 0, -1);
            append_forest(out, right.forest, left.forest.n_nodes(), -1);
            for (int e : left.gamma) out.gamma.push_back(node.maps.blue_map[0][e]);
            for (int e : right.gamma) out.gamma.push_back(node.maps.blue_map[1][e]);
            return out;
        }
        case DerivKind::RemoveRed:
            return extract(*node.children[0]);
        case DerivKind::RemoveBlue:
        case DerivKind::Transition: {
            EliminationForest sub = extract(*node.children[0]);
            const KLabeledIncidenceGraph& child = node.children[0]->result;
            bool glued = node.kind == DerivKind::Transition;
            EliminationForest out;
            int chain = static_cast<int>(node.removed.size());
            for (int i = 0; i < chain; ++i)
                out.forest.add_node("n" + std::to_string(i + 1), i - 1);
            append_forest(out, sub.forest, chain, chain - 1);
            for (int label : node.removed) {
                int e = child.b.at(label);
                out.gamma.push_back(glued ? node.maps.blue_map[1][e] : e);
            }
            for (int e : sub.gamma) out.gamma.push_back(glued ? node.maps.blue_map[1][e] : e);
            return out;
        }
    }
    throw std::logic_error("extract_forest: unknown derivation kind");
}

}  // namespace

EliminationForest extract_forest(const Derivation& d) { return extract(*d); }

namespace {

struct RawStep {
    int line = 0;
    std::string kind, name;
    std::string file;                                   // BASE
    std::string left, right;                            // GLUE; left doubles as child
    std::vector<std::pair<int, std::string>> r, b;      // BASE
    std::map<int, int> fn;                              // BASE g, TRANS f
    std::vector<int> labels;                            // RMR / RMB
};

[[noreturn]] void fail(int line, const std::string& what) { throw ParseError(line, what); }

// "{a,b,c}" -> the comma-separated items; "{}" -> none.
std::vector<std::string> brace_items(int line, const std::string& tok) {
    if (tok.size() < 2 || tok.front() != '{' || tok.back() != '}')
        fail(line, "expected {...}, got '" + tok + "'");
    std::vector<std::string> out;
    std::string body = tok.substr(1, tok.size() - 2);
    if (body.empty()) return out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) fail(line, "empty item in '" + tok + "'");
        out.push_back(item);
    }
    return out;
}

int parse_int(int line, const std::string& s) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(line, "expected an integer, got '" + s + "'");
    }
}

std::string strip_key(int line, const std::string& tok, const std::string& key) {
    if (tok.rfind(key + "=", 0) != 0) fail(line, "expected " + key + "=..., got '" + tok + "'");
    return tok.substr(key.size() + 1);
}

std::vector<std::pair<int, std::string>> parse_name_map(int line, const std::string& body) {
    std::vector<std::pair<int, std::string>> out;
    for (const std::string& item : brace_items(line, body)) {
        size_t colon = item.find(':');
        if (colon == std::string::npos) fail(line, "expected i:id in '" + item + "'");
        out.push_back({parse_int(line, item.substr(0, colon)), item.substr(colon + 1)});
    }
    return out;
}

std::map<int, int> parse_int_map(int line, const std::string& body) {
    std::map<int, int> out;
    for (const std::string& item : brace_items(line, body)) {
        size_t colon = item.find(':');
        if (colon == std::string::npos) fail(line, "expected i:j in '" + item + "'");
        out[parse_int(line, item.substr(0, colon))] = parse_int(line, item.substr(colon + 1));
    }
    return out;
}

RawStep parse_step(int line_no, const std::string& line) {
    std::stringstream ss(line);
    std::vector<std::string> tok;
    std::string t;
    while (ss >> t) tok.push_back(t);
    RawStep step;
    step.line = line_no;
    step.kind = tok[0];
    if (step.kind == "BASE") {
        if (tok.size() != 6) fail(line_no, "BASE wants <name> <hg-file> r= b= g=");
        step.name = tok[1];
        step.file = tok[2];
        step.r = parse_name_map(line_no, strip_key(line_no, tok[3], "r"));
        step.b = parse_name_map(line_no, strip_key(line_no, tok[4], "b"));
        step.fn = parse_int_map(line_no, strip_key(line_no, tok[5], "g"));
    } else if (step.kind == "GLUE") {
        if (tok.size() != 4) fail(line_no, "GLUE wants <name> <left> <right>");
        step.name = tok[1];
        step.left = tok[2];
        step.right = tok[3];
    } else if (step.kind == "TRANS") {
        if (tok.size() != 4) fail(line_no, "TRANS wants <name> <child> f=...");
        step.name = tok[1];
        step.left = tok[2];
        step.fn = parse_int_map(line_no, strip_key(line_no, tok[3], "f"));
    } else if (step.kind == "RMR" || step.kind == "RMB") {
        if (tok.size() != 4) fail(line_no, step.kind + " wants <name> <child> {labels}");
        step.name = tok[1];
        step.left = tok[2];
        for (const std::string& item : brace_items(line_no, tok[3]))
            step.labels.push_back(parse_int(line_no, item));
    } else {
        fail(line_no, "unknown step '" + step.kind + "'");
    }
    return step;
}

}  // namespace

GliReplay replay_gli(std::istream& in, const std::string& base_dir) {
    std::vector<RawStep> raw;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        raw.push_back(parse_step(line_no, line));
    }

    GliReplay replay;
    for (const RawStep& step : raw) {
        for (auto& [label, name] : step.b) replay.k = std::max(replay.k, label);
        if (step.kind == "BASE" || step.kind == "TRANS")
            for (auto& [i, j] : step.fn) replay.k = std::max(replay.k, j);
        if (step.kind == "RMB")
            for (int label : step.labels) replay.k = std::max(replay.k, label);
    }

    std::map<std::string, Derivation> by_name;
    auto lookup = [&](int line_no_, const std::string& name) -> const Derivation& {
        auto it = by_name.find(name);
        if (it == by_name.end()) fail(line_no_, "unknown step name '" + name + "'");
        return it->second;
    };
    for (const RawStep& step : raw) {
        if (by_name.count(step.name)) fail(step.line, "duplicate step name '" + step.name + "'");
        Derivation d;
        try {
            if (step.kind == "BASE") {
                std::filesystem::path file(step.file);
                if (file.is_relative() && !base_dir.empty())
                    file = std::filesystem::path(base_dir) / file;
                IncidenceGraph skeleton = to_incidence(read_hg_file(file.string()));
                d = derive_base(make_kli(std::move(skeleton), replay.k, step.r, step.b,
                                         {step.fn.begin(), step.fn.end()}));
            } else if (step.kind == "GLUE") {
                d = derive_glue(lookup(step.line, step.left), lookup(step.line, step.right));
            } else if (step.kind == "TRANS") {
                d = derive_transition(lookup(step.line, step.left), step.fn);
            } else if (step.kind == "RMR") {
                d = derive_remove_red(lookup(step.line, step.left), step.labels);
            } else {
                d = derive_remove_blue(lookup(step.line, step.left), step.labels);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            fail(step.line, e.what());
        }
        by_name.emplace(step.name, d);
        replay.steps.push_back({step.name, std::move(d)});
    }
    return replay;
}

GliReplay replay_gli_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return replay_gli(in, std::filesystem::path(path).parent_path().string());
}

}  // namespace hgx
