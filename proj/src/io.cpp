#include "hgx/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hgx/errors.hpp"

namespace hgx {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t) {
        if (t[0] == '#') break;
        out.push_back(t);
    }
    return out;
}

}  // namespace

Hypergraph read_hg(std::istream& in) {
    std::vector<std::string> declared;
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = tokens_of(line);
        if (tok.empty()) continue;
        if (tok[0] == "V") {
            declared.insert(declared.end(), tok.begin() + 1, tok.end());
        } else if (tok[0] == "E") {
            if (tok.size() < 3 || tok[2] != ":")
                throw ParseError(lineno, "expected 'E <edge-id> : <vertex-id> ...'");
            edges.emplace_back(tok[1], std::vector<std::string>(tok.begin() + 3, tok.end()));
        } else {
            throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
        }
    }
    try {
        return Hypergraph::make(std::move(edges), std::move(declared));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

Hypergraph read_hg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return read_hg(in);
}

std::string write_hg(const Hypergraph& h) {
    std::ostringstream os;
    if (h.n_vertices() > 0) {
        os << "V";
        for (auto& v : h.vertex_names) os << " " << v;
        os << "\n";
    }
    for (int e = 0; e < h.n_edges(); ++e) {
        os << "E " << h.edge_names[e] << " :";
        for (int v : h.content[e]) os << " " << h.vertex_names[v];
        os << "\n";
    }
    return os.str();
}

EliminationForest read_ef(std::istream& in, const IncidenceGraph& instance) {
    EliminationForest ef;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = tokens_of(line);
        if (tok.empty()) continue;
        if (tok[0] != "N" || tok.size() != 4)
            throw ParseError(lineno, "expected 'N <node-id> parent=<node-id|-> edge=<edge-id>'");
        auto field = [&](const std::string& t, const std::string& key) {
            if (t.rfind(key + "=", 0) != 0)
                throw ParseError(lineno, "expected '" + key + "=...', got '" + t + "'");
            return t.substr(key.size() + 1);
        };
        std::string parent = field(tok[2], "parent");
        std::string edge = field(tok[3], "edge");
        int parent_ix = -1;
        if (parent != "-") {
            auto p = ef.forest.node_index(parent);
            if (!p) throw ParseError(lineno, "parent '" + parent + "' not declared yet");
            parent_ix = *p;
        }
        auto b = instance.blue_index(edge);
        if (!b) throw ParseError(lineno, "unknown edge id '" + edge + "'");
        try {
            ef.forest.add_node(tok[1], parent_ix);
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
        ef.gamma.push_back(*b);
    }
    return ef;
}

EliminationForest read_ef_file(const std::string& path, const IncidenceGraph& instance) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return read_ef(in, instance);
}

std::string write_ef(const EliminationForest& ef, const IncidenceGraph& instance) {
    std::ostringstream os;
    // level order keeps parents above children, as the reader requires
    std::vector<int> order;
    for (int n = 0; n < ef.forest.n_nodes(); ++n) order.push_back(n);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return ef.forest.level(a) < ef.forest.level(b);
    });
    for (int n : order) {
        os << "N " << ef.forest.node_names[n] << " parent=";
        os << (ef.forest.parent[n] == -1 ? "-" : ef.forest.node_names[ef.forest.parent[n]]);
        os << " edge=" << instance.blue_names[ef.gamma[n]] << "\n";
    }
    return os.str();
}

}  // namespace hgx
