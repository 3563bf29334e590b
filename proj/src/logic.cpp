#include "hgx/logic.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hgx/errors.hpp"

namespace hgx {

namespace {

FormulaPtr make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

bool quantifies_v(FormulaKind k) {
    return k == FormulaKind::ExistsGeqV || k == FormulaKind::ExistsEqV;
}

std::string var_name(bool vertex, int i) {
    return (vertex ? "v" : "e") + std::to_string(i);
}

}  // namespace

FormulaPtr f_top() {
    Formula f;
    return make(std::move(f));
}

FormulaPtr f_veq(int i, int ip) {
    Formula f;
    f.kind = FormulaKind::VEq;
    f.a = i;
    f.b = ip;
    return make(std::move(f));
}

FormulaPtr f_eeq(int j, int jp) {
    Formula f;
    f.kind = FormulaKind::EEq;
    f.a = j;
    f.b = jp;
    return make(std::move(f));
}

FormulaPtr f_edge(int j, int i) {
    Formula f;
    f.kind = FormulaKind::Edge;
    f.a = j;
    f.b = i;
    return make(std::move(f));
}

FormulaPtr f_not(FormulaPtr phi) {
    if (!phi) throw std::invalid_argument("f_not: null operand");
    Formula f;
    f.kind = FormulaKind::Not;
    f.child = std::move(phi);
    return make(std::move(f));
}

FormulaPtr f_and(FormulaPtr l, FormulaPtr r) {
    if (!l || !r) throw std::invalid_argument("f_and: null operand");
    Formula f;
    f.kind = FormulaKind::And;
    f.child = std::move(l);
    f.rhs = std::move(r);
    return make(std::move(f));
}

static FormulaPtr make_quant(FormulaKind kind, int n, std::vector<int> tuple,
                             std::map<int, int> guard, FormulaPtr body) {
    if (!body) throw std::invalid_argument("quantifier: null body");
    if (n < 1) throw std::invalid_argument("quantifier: count must be positive");
    Formula f;
    f.kind = kind;
    f.n = n;
    f.tuple = std::move(tuple);
    f.guard = std::move(guard);
    f.child = std::move(body);
    return make(std::move(f));
}

FormulaPtr f_exists_v(bool exact, int n, std::vector<int> tuple, std::map<int, int> guard,
                      FormulaPtr body) {
    return make_quant(exact ? FormulaKind::ExistsEqV : FormulaKind::ExistsGeqV, n,
                      std::move(tuple), std::move(guard), std::move(body));
}

FormulaPtr f_exists_e(bool exact, int n, std::vector<int> tuple, std::map<int, int> guard,
                      FormulaPtr body) {
    return make_quant(exact ? FormulaKind::ExistsEqE : FormulaKind::ExistsGeqE, n,
                      std::move(tuple), std::move(guard), std::move(body));
}

namespace {

struct FreeSets {
    std::set<int> v, e;
};

FreeSets free_sets(const Formula* f) {
    switch (f->kind) {
        case FormulaKind::Top:
            return {};
        case FormulaKind::VEq:
            return {{f->a, f->b}, {}};
        case FormulaKind::EEq:
            return {{}, {f->a, f->b}};
        case FormulaKind::Edge:
            return {{f->b}, {f->a}};
        case FormulaKind::Not:
            return free_sets(f->child.get());
        case FormulaKind::And: {
            FreeSets l = free_sets(f->child.get());
            FreeSets r = free_sets(f->rhs.get());
            l.v.insert(r.v.begin(), r.v.end());
            l.e.insert(r.e.begin(), r.e.end());
            return l;
        }
        default: {
            // Guarded body: the guard's incidence atoms contribute frees.
            FreeSets s = free_sets(f->child.get());
            for (auto& [i, j] : f->guard) {
                s.v.insert(i);
                s.e.insert(j);
            }
            for (int x : f->tuple) {
                if (quantifies_v(f->kind))
                    s.v.erase(x);
                else
                    s.e.erase(x);
            }
            return s;
        }
    }
}

}  // namespace

std::set<int> free_v(const FormulaPtr& phi) {
    if (!phi) throw std::invalid_argument("free_v: null formula");
    return free_sets(phi.get()).v;
}

std::set<int> free_e(const FormulaPtr& phi) {
    if (!phi) throw std::invalid_argument("free_e: null formula");
    return free_sets(phi.get()).e;
}

int guard_depth(const FormulaPtr& phi) {
    if (!phi) throw std::invalid_argument("guard_depth: null formula");
    const Formula* f = phi.get();
    switch (f->kind) {
        case FormulaKind::Top:
        case FormulaKind::VEq:
        case FormulaKind::EEq:
        case FormulaKind::Edge:
            return 0;
        case FormulaKind::Not:
            return guard_depth(f->child);
        case FormulaKind::And:
            return std::max(guard_depth(f->child), guard_depth(f->rhs));
        case FormulaKind::ExistsGeqV:
        case FormulaKind::ExistsEqV:
            return guard_depth(f->child);
        default:
            return guard_depth(f->child) + static_cast<int>(f->tuple.size());
    }
}

int ast_size(const FormulaPtr& phi) {
    if (!phi) throw std::invalid_argument("ast_size: null formula");
    const Formula* f = phi.get();
    int n = 1;
    if (f->child) n += ast_size(f->child);
    if (f->rhs) n += ast_size(f->rhs);
    return n;
}

namespace {

struct WfCheck {
    int k;
    std::vector<std::string>* out;

    void bad(const std::string& msg) { out->push_back(msg); }

    void check_vvar(int i, const std::string& where) {
        if (i < 1) bad(where + ": vertex variable index " + std::to_string(i) + " is not positive");
    }

    void check_evar(int j, const std::string& where) {
        if (j < 1)
            bad(where + ": edge variable index " + std::to_string(j) + " is not positive");
        else if (j > k)
            bad(where + ": edge variable e" + std::to_string(j) + " exceeds the bound k=" +
                std::to_string(k));
    }

    void run(const Formula* f) {
        switch (f->kind) {
            case FormulaKind::Top:
                return;
            case FormulaKind::VEq:
                check_vvar(f->a, "v-equality");
                check_vvar(f->b, "v-equality");
                return;
            case FormulaKind::EEq:
                check_evar(f->a, "e-equality");
                check_evar(f->b, "e-equality");
                return;
            case FormulaKind::Edge:
                check_evar(f->a, "incidence atom");
                check_vvar(f->b, "incidence atom");
                return;
            case FormulaKind::Not:
                run(f->child.get());
                return;
            case FormulaKind::And:
                run(f->child.get());
                run(f->rhs.get());
                return;
            default:
                check_quant(f);
                return;
        }
    }

    void check_quant(const Formula* f) {
        bool vq = quantifies_v(f->kind);
        std::string where = std::string(vq ? "vertex" : "edge") + " quantifier";
        if (f->n < 1) bad(where + ": count " + std::to_string(f->n) + " is not positive");
        if (f->tuple.empty()) bad(where + ": empty variable tuple");
        for (size_t i = 0; i < f->tuple.size(); ++i) {
            if (vq)
                check_vvar(f->tuple[i], where);
            else
                check_evar(f->tuple[i], where);
            if (i > 0 && f->tuple[i] <= f->tuple[i - 1])
                bad(where + ": tuple is not strictly ascending at " +
                    var_name(vq, f->tuple[i]));
        }
        FreeSets body = free_sets(f->child.get());
        for (auto& [i, j] : f->guard) {
            check_vvar(i, where + " guard");
            check_evar(j, where + " guard");
        }
        // The guard must cover exactly the body's free vertex variables.
        for (auto& [i, j] : f->guard) {
            (void)j;
            if (!body.v.count(i))
                bad(where + ": guard entry for v" + std::to_string(i) +
                    " which is not free in the body");
        }
        for (int i : body.v) {
            if (!f->guard.count(i))
                bad(where + ": free vertex variable v" + std::to_string(i) + " is unguarded");
        }
        // Quantified variables must be free in the guarded body.
        FreeSets guarded = body;
        for (auto& [i, j] : f->guard) {
            guarded.v.insert(i);
            guarded.e.insert(j);
        }
        for (int x : f->tuple) {
            bool free_here = vq ? guarded.v.count(x) != 0 : guarded.e.count(x) != 0;
            if (!free_here)
                bad(where + ": quantified variable " + var_name(vq, x) +
                    " is not free in the guarded body");
        }
        run(f->child.get());
    }
};

}  // namespace

LogicVerdict wellformed_gck(const FormulaPtr& phi, int k) {
    if (!phi) throw std::invalid_argument("wellformed_gck: null formula");
    if (k < 1) throw std::invalid_argument("wellformed_gck: k must be positive");
    LogicVerdict v;
    WfCheck{k, &v.violations}.run(phi.get());
    v.ok = v.violations.empty();
    return v;
}

namespace {

// Collects a guard conjunction: either a single T, or a conjunction tree of
// incidence atoms with pairwise distinct vertex variables.
bool collect_guard_tree(const Formula* f, std::map<int, int>& g, bool top) {
    switch (f->kind) {
        case FormulaKind::Top:
            return top;  // T stands alone for an empty guard
        case FormulaKind::Edge:
            return g.emplace(f->b, f->a).second;
        case FormulaKind::And:
            if (f->child->kind == FormulaKind::Top || f->rhs->kind == FormulaKind::Top)
                return false;
            return collect_guard_tree(f->child.get(), g, false) &&
                   collect_guard_tree(f->rhs.get(), g, false);
        default:
            return false;
    }
}

std::set<int> index_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

std::map<int, int> restrict_to(const std::map<int, int>& g, const std::set<int>& dom) {
    std::map<int, int> out;
    for (auto& [i, j] : g)
        if (dom.count(i)) out.emplace(i, j);
    return out;
}

struct RgcCheck {
    std::vector<std::string>* out;
    bool failed = false;

    void bad(const std::string& msg) {
        if (!failed) out->push_back(msg);
        failed = true;
    }

    static std::string show_guard(const std::map<int, int>& g) {
        std::string s = "[";
        bool first = true;
        for (auto& [i, j] : g) {
            if (!first) s += ",";
            first = false;
            s += "v" + std::to_string(i) + "@e" + std::to_string(j);
        }
        return s + "]";
    }

    // Checks that (guard g & core) is derivable.
    void run(const std::map<int, int>& g, const Formula* f) {
        if (failed) return;
        switch (f->kind) {
            case FormulaKind::Top:
            case FormulaKind::VEq:
            case FormulaKind::EEq:
            case FormulaKind::Edge: {
                FreeSets fr = free_sets(f);
                std::set<int> dom;
                for (auto& [i, j] : g) {
                    (void)j;
                    dom.insert(i);
                }
                if (dom != fr.v)
                    bad("atom guard " + show_guard(g) +
                        " does not cover exactly the atom's free vertex variables");
                return;
            }
            case FormulaKind::Not:
                run(g, f->child.get());
                return;
            case FormulaKind::And: {
                FreeSets l = free_sets(f->child.get());
                FreeSets r = free_sets(f->rhs.get());
                std::set<int> both = l.v;
                both.insert(r.v.begin(), r.v.end());
                for (auto& [i, j] : g) {
                    (void)j;
                    if (!both.count(i)) {
                        bad("conjunction guard mentions v" + std::to_string(i) +
                            " which is free in neither conjunct");
                        return;
                    }
                }
                run(restrict_to(g, l.v), f->child.get());
                run(restrict_to(g, r.v), f->rhs.get());
                return;
            }
            default:
                check_quant(g, f);
                return;
        }
    }

    void check_quant(const std::map<int, int>& outer, const Formula* f) {
        std::set<int> bound = index_set(f->tuple);
        FreeSets body = free_sets(f->child.get());
        if (quantifies_v(f->kind)) {
            for (int x : f->tuple) {
                if (!body.v.count(x)) {
                    bad("vertex quantifier binds v" + std::to_string(x) +
                        " which is not free in its body");
                    return;
                }
            }
            std::set<int> keep;
            for (auto& [i, j] : f->guard) {
                (void)j;
                if (!bound.count(i)) keep.insert(i);
            }
            if (outer != restrict_to(f->guard, keep)) {
                bad("vertex quantifier: enclosing guard " + show_guard(outer) +
                    " is not the body guard " + show_guard(f->guard) +
                    " restricted to the unquantified variables");
                return;
            }
        } else {
            std::set<int> body_e = body.e;
            std::set<int> img;
            for (auto& [i, j] : f->guard) {
                (void)i;
                body_e.insert(j);
                img.insert(j);
            }
            for (int x : f->tuple) {
                if (!body_e.count(x)) {
                    bad("edge quantifier binds e" + std::to_string(x) +
                        " which is not free in its guarded body");
                    return;
                }
            }
            std::set<int> odom, idom;
            for (auto& [i, j] : outer) {
                (void)j;
                odom.insert(i);
            }
            for (auto& [i, j] : f->guard) {
                (void)j;
                idom.insert(i);
            }
            if (odom != idom) {
                bad("edge quantifier: enclosing guard " + show_guard(outer) +
                    " guards different variables than the body guard " + show_guard(f->guard));
                return;
            }
            for (auto& [i, j] : outer) {
                int inner = f->guard.at(i);
                if (j == inner || bound.count(j) || !img.count(j)) continue;
                bad("edge quantifier: enclosing guard moves v" + std::to_string(i) +
                    " onto e" + std::to_string(j) +
                    ", which is neither quantified here nor outside the body guard's image");
                return;
            }
        }
        run(f->guard, f->child.get());
    }
};

}  // namespace

LogicVerdict is_rgc(const FormulaPtr& phi, int k) {
    LogicVerdict wf = wellformed_gck(phi, k);
    if (!wf.ok) return wf;
    LogicVerdict v;
    const Formula* f = phi.get();
    std::map<int, int> g;
    const Formula* core = f;
    if (f->kind == FormulaKind::And && collect_guard_tree(f->child.get(), g, true)) {
        core = f->rhs.get();
    } else {
        g.clear();
    }
    RgcCheck chk{&v.violations};
    chk.run(g, core);
    v.ok = v.violations.empty();
    return v;
}

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, col = 1;
        for (size_t i = 0; i < pos && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(line, msg + " at column " + std::to_string(col));
    }

    void ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool lit(const std::string& s) {
        ws();
        if (text.compare(pos, s.size(), s) == 0) {
            pos += s.size();
            return true;
        }
        return false;
    }

    void expect(const std::string& s) {
        if (!lit(s)) fail("expected \"" + s + "\"");
    }

    int nat() {
        ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        long v = 0;
        for (size_t i = start; i < pos; ++i) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000) fail("number too large");
        }
        return static_cast<int>(v);
    }

    int var(char kind) {
        ws();
        if (pos >= text.size() || text[pos] != kind)
            fail(std::string("expected a ") + (kind == 'v' ? "vertex" : "edge") + " variable");
        ++pos;
        return nat();
    }

    FormulaPtr formula() {
        char c = peek();
        if (c == '~') {
            ++pos;
            return f_not(formula());
        }
        if (c == '(') {
            ++pos;
            FormulaPtr l = formula();
            expect("&");
            FormulaPtr r = formula();
            expect(")");
            return f_and(std::move(l), std::move(r));
        }
        if (lit("existsge")) return quant(false);
        if (lit("existseq")) return quant(true);
        if (c == 'T') {
            ++pos;
            return f_top();
        }
        if (c == 'E') {
            ++pos;
            expect("(");
            int j = var('e');
            expect(",");
            int i = var('v');
            expect(")");
            return f_edge(j, i);
        }
        if (c == 'v') {
            int i = var('v');
            expect("=");
            int ip = var('v');
            return f_veq(i, ip);
        }
        if (c == 'e') {
            int j = var('e');
            expect("=");
            int jp = var('e');
            return f_eeq(j, jp);
        }
        fail("expected a formula");
    }

    FormulaPtr quant(bool exact) {
        int n = nat();
        if (n < 1) fail("quantifier count must be positive");
        expect("(");
        char kind = peek();
        if (kind != 'v' && kind != 'e') fail("expected a variable list");
        std::vector<int> tuple;
        tuple.push_back(var(kind));
        while (lit(",")) tuple.push_back(var(kind));
        expect(")");
        for (size_t i = 1; i < tuple.size(); ++i)
            if (tuple[i] <= tuple[i - 1]) fail("variable list must be strictly ascending");
        std::map<int, int> g;
        bool has_guard = false;
        if (peek() == '[') {
            ++pos;
            has_guard = true;
            if (peek() != ']') {
                do {
                    int i = var('v');
                    expect("@");
                    int j = var('e');
                    if (!g.emplace(i, j).second)
                        fail("duplicate guard entry for v" + std::to_string(i));
                } while (lit(","));
            }
            expect("]");
        }
        expect(".");
        FormulaPtr body = formula();
        if (!has_guard && !free_v(body).empty())
            fail("missing guard: the quantifier body has free vertex variables");
        return kind == 'v' ? f_exists_v(exact, n, std::move(tuple), std::move(g), std::move(body))
                           : f_exists_e(exact, n, std::move(tuple), std::move(g), std::move(body));
    }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
    Parser p{text};
    FormulaPtr f = p.formula();
    p.ws();
    if (p.pos != text.size()) p.fail("trailing input after the formula");
    return f;
}

FormulaPtr parse_formula_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open formula file: " + path);
    std::string text, line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') line.clear();
        text += line;
        text += '\n';
    }
    return parse_formula(text);
}

std::string render(const FormulaPtr& phi) {
    if (!phi) throw std::invalid_argument("render: null formula");
    const Formula* f = phi.get();
    switch (f->kind) {
        case FormulaKind::Top:
            return "T";
        case FormulaKind::VEq:
            return "v" + std::to_string(f->a) + "=v" + std::to_string(f->b);
        case FormulaKind::EEq:
            return "e" + std::to_string(f->a) + "=e" + std::to_string(f->b);
        case FormulaKind::Edge:
            return "E(e" + std::to_string(f->a) + ",v" + std::to_string(f->b) + ")";
        case FormulaKind::Not:
            return "~" + render(f->child);
        case FormulaKind::And:
            return "(" + render(f->child) + " & " + render(f->rhs) + ")";
        default: {
            bool vq = quantifies_v(f->kind);
            bool exact = f->kind == FormulaKind::ExistsEqV || f->kind == FormulaKind::ExistsEqE;
            std::string s = exact ? "existseq " : "existsge ";
            s += std::to_string(f->n) + " (";
            for (size_t i = 0; i < f->tuple.size(); ++i) {
                if (i) s += ",";
                s += var_name(vq, f->tuple[i]);
            }
            s += ") [";
            bool first = true;
            for (auto& [i, j] : f->guard) {
                if (!first) s += ",";
                first = false;
                s += "v" + std::to_string(i) + "@e" + std::to_string(j);
            }
            s += "] . " + render(f->child);
            return s;
        }
    }
}

FormulaPtr desugar_eq(const FormulaPtr& phi) {
    if (!phi) throw std::invalid_argument("desugar_eq: null formula");
    const Formula* f = phi.get();
    switch (f->kind) {
        case FormulaKind::Top:
        case FormulaKind::VEq:
        case FormulaKind::EEq:
        case FormulaKind::Edge:
            return phi;
        case FormulaKind::Not:
            return f_not(desugar_eq(f->child));
        case FormulaKind::And:
            return f_and(desugar_eq(f->child), desugar_eq(f->rhs));
        default: {
            FormulaPtr body = desugar_eq(f->child);
            bool vq = quantifies_v(f->kind);
            bool exact = f->kind == FormulaKind::ExistsEqV || f->kind == FormulaKind::ExistsEqE;
            auto quant = [&](int n) {
                return vq ? f_exists_v(false, n, f->tuple, f->guard, body)
                          : f_exists_e(false, n, f->tuple, f->guard, body);
            };
            if (!exact) return quant(f->n);
            return f_and(quant(f->n), f_not(quant(f->n + 1)));
        }
    }
}

namespace {

struct Evaluator {
    const IncidenceGraph& g;
    std::map<const Formula*, FreeSets> free_cache;
    std::map<std::string, bool> memo;

    const FreeSets& frees(const Formula* f) {
        auto it = free_cache.find(f);
        if (it == free_cache.end()) it = free_cache.emplace(f, free_sets(f)).first;
        return it->second;
    }

    static int lookup(const std::map<int, int>& nu, int var, char kind) {
        auto it = nu.find(var);
        if (it == nu.end())
            throw std::invalid_argument(std::string("eval: unassigned variable ") + kind +
                                        std::to_string(var));
        return it->second;
    }

    bool edge_holds(int blue, int red) const {
        auto& c = g.content[blue];
        return std::binary_search(c.begin(), c.end(), red);
    }

    bool ev(const Formula* f, std::map<int, int>& nu_v, std::map<int, int>& nu_e) {
        const FreeSets& fr = frees(f);
        std::ostringstream key;
        key << static_cast<const void*>(f);
        for (int i : fr.v) key << " v" << i << "=" << lookup(nu_v, i, 'v');
        for (int j : fr.e) key << " e" << j << "=" << lookup(nu_e, j, 'e');
        auto it = memo.find(key.str());
        if (it != memo.end()) return it->second;
        bool r = ev_raw(f, nu_v, nu_e);
        memo.emplace(key.str(), r);
        return r;
    }

    bool ev_raw(const Formula* f, std::map<int, int>& nu_v, std::map<int, int>& nu_e) {
        switch (f->kind) {
            case FormulaKind::Top:
                return true;
            case FormulaKind::VEq:
                return lookup(nu_v, f->a, 'v') == lookup(nu_v, f->b, 'v');
            case FormulaKind::EEq:
                return lookup(nu_e, f->a, 'e') == lookup(nu_e, f->b, 'e');
            case FormulaKind::Edge:
                return edge_holds(lookup(nu_e, f->a, 'e'), lookup(nu_v, f->b, 'v'));
            case FormulaKind::Not:
                return !ev(f->child.get(), nu_v, nu_e);
            case FormulaKind::And:
                return ev(f->child.get(), nu_v, nu_e) && ev(f->rhs.get(), nu_v, nu_e);
            default:
                return quant(f, nu_v, nu_e);
        }
    }

    bool guarded_body(const Formula* f, std::map<int, int>& nu_v, std::map<int, int>& nu_e) {
        for (auto& [i, j] : f->guard)
            if (!edge_holds(lookup(nu_e, j, 'e'), lookup(nu_v, i, 'v'))) return false;
        return ev(f->child.get(), nu_v, nu_e);
    }

    bool quant(const Formula* f, std::map<int, int>& nu_v, std::map<int, int>& nu_e) {
        bool vq = quantifies_v(f->kind);
        bool exact = f->kind == FormulaKind::ExistsEqV || f->kind == FormulaKind::ExistsEqE;
        std::map<int, int>& nu = vq ? nu_v : nu_e;
        int domain = vq ? g.n_reds() : g.n_blues();
        // Save shadowed bindings so rebinding an outer variable is safe.
        std::vector<std::pair<int, bool>> saved;  // (old value, had value)
        for (int x : f->tuple) {
            auto it = nu.find(x);
            saved.emplace_back(it == nu.end() ? 0 : it->second, it != nu.end());
        }
        long long needed = exact ? f->n + 1 : f->n;
        long long count = 0;
        size_t len = f->tuple.size();
        if (domain > 0) {
            std::vector<int> val(len, 0);
            for (size_t i = 0; i < len; ++i) nu[f->tuple[i]] = 0;
            while (true) {
                if (guarded_body(f, nu_v, nu_e) && ++count >= needed) break;
                size_t i = len;
                while (i > 0 && val[i - 1] + 1 == domain) --i;
                if (i == 0) break;
                ++val[i - 1];
                nu[f->tuple[i - 1]] = val[i - 1];
                for (size_t j = i; j < len; ++j) {
                    val[j] = 0;
                    nu[f->tuple[j]] = 0;
                }
            }
        }
        for (size_t i = 0; i < len; ++i) {
            if (saved[i].second)
                nu[f->tuple[i]] = saved[i].first;
            else
                nu.erase(f->tuple[i]);
        }
        return exact ? count == f->n : count >= f->n;
    }
};

}  // namespace

bool eval(const FormulaPtr& phi, const Interpretation& interp) {
    if (!phi) throw std::invalid_argument("eval: null formula");
    Evaluator e{interp.graph, {}, {}};
    std::map<int, int> nu_v = interp.nu_v;
    std::map<int, int> nu_e = interp.nu_e;
    return e.ev(phi.get(), nu_v, nu_e);
}

namespace {

// Small deterministic generator: draws from a fixed set of counting
// patterns, then closes under negation and conjunction.
struct PoolGen {
    std::mt19937 rng;
    int k, d, size_bound;
    std::vector<FormulaPtr> out;
    std::set<std::string> seen;

    int pick(int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); }

    void push(const FormulaPtr& f) {
        if (ast_size(f) > size_bound) return;
        if (guard_depth(f) > d) return;
        if (!wellformed_gck(f, k).ok) return;
        if (seen.insert(render(f)).second) out.push_back(f);
    }
};

}  // namespace

std::vector<FormulaPtr> sentence_pool(int k, int d, int size_bound, unsigned seed) {
    if (k < 1) throw std::invalid_argument("sentence_pool: k must be positive");
    if (d < 1) throw std::invalid_argument("sentence_pool: guard-depth bound must be positive");
    if (size_bound < 1) throw std::invalid_argument("sentence_pool: size bound must be positive");
    PoolGen gen{std::mt19937(seed), k, d, size_bound, {}, {}};
    // Baseline edge-count sentences are always present.
    for (int n = 1; n <= 4; ++n) gen.push(f_exists_e(false, n, {1}, {}, f_eeq(1, 1)));
    for (int attempt = 0; attempt < 160; ++attempt) {
        int n = gen.pick(1, 5);
        int m = gen.pick(1, 4);
        bool exact = gen.pick(0, 1) == 1;
        switch (gen.pick(0, 6)) {
            case 0:
                gen.push(f_exists_e(exact, n, {1}, {}, f_eeq(1, 1)));
                break;
            case 1:
                // >= n edges containing >= m vertices
                gen.push(f_exists_e(false, n, {1}, {},
                                    f_exists_v(exact, m, {1}, {{1, 1}}, f_veq(1, 1))));
                break;
            case 2:
                // some vertex lies in >= m edges
                gen.push(f_exists_e(
                    false, 1, {1}, {},
                    f_exists_v(false, 1, {1}, {{1, 1}},
                               f_exists_e(exact, m, {1}, {{1, 1}}, f_edge(1, 1)))));
                break;
            case 3:
                // >= n edges with >= m pairwise choices of two distinct vertices
                gen.push(f_exists_e(
                    false, n, {1}, {},
                    f_exists_v(exact, m, {1, 2}, {{1, 1}, {2, 1}}, f_not(f_veq(1, 2)))));
                break;
            case 4:
                if (!gen.out.empty())
                    gen.push(f_not(gen.out[gen.pick(0, static_cast<int>(gen.out.size()) - 1)]));
                break;
            case 5:
                if (gen.out.size() >= 2) {
                    int i = gen.pick(0, static_cast<int>(gen.out.size()) - 1);
                    int j = gen.pick(0, static_cast<int>(gen.out.size()) - 1);
                    if (i != j) gen.push(f_and(gen.out[i], gen.out[j]));
                }
                break;
            default:
                // two edges sharing a vertex (needs two edge variables)
                if (k >= 2)
                    gen.push(f_exists_e(false, n, {1, 2}, {},
                                        f_exists_v(false, 1, {1}, {{1, 1}},
                                                   f_and(f_edge(1, 1), f_edge(2, 1)))));
                break;
        }
        if (gen.out.size() >= 64) break;
    }
    return gen.out;
}

}  // namespace hgx
