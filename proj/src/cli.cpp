#include "hgx/cli.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hgx/canonical.hpp"
#include "hgx/derivation.hpp"
#include "hgx/elimination.hpp"
#include "hgx/errors.hpp"
#include "hgx/families.hpp"
#include "hgx/homcount.hpp"
#include "hgx/hypergraph.hpp"
#include "hgx/io.hpp"
#include "hgx/logic.hpp"
#include "hgx/repro.hpp"

namespace hgx {
namespace {

constexpr const char* kSchema = "hgx.v1";

enum class Format { Human, Tsv, Json };

const std::map<std::string, Format> kFormats{
    {"human", Format::Human}, {"tsv", Format::Tsv}, {"json", Format::Json}};

std::string fmt_name(Format f) {
    switch (f) {
        case Format::Human: return "human";
        case Format::Tsv: return "tsv";
        default: return "json";
    }
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ",") + x;
    return s.empty() ? "-" : s;
}

// Effective-configuration echo: one "# hgx <verb> key=value ..." line on the
// diagnostic stream, so stdout stays pure data.
void echo(std::ostream& err, const std::string& verb,
          const std::vector<std::pair<std::string, std::string>>& kv) {
    err << "# hgx " << verb;
    for (const auto& [k, v] : kv) err << ' ' << k << '=' << v;
    err << '\n';
}

struct ClassChoice {
    TruncationKind kind;
    bool incidence;  // count under incidence-graph semantics
};

ClassChoice class_choice(const std::string& name) {
    if (name == "SHD") return {TruncationKind::Shd, false};
    if (name == "HD") return {TruncationKind::Hd, false};
    if (name == "ISHD") return {TruncationKind::Ishd, true};
    return {TruncationKind::Ihd, true};
}

ClassTruncation make_truncation(const std::string& cls, int k, int max_e, int max_v,
                                bool connected) {
    ClassTruncation ct;
    ct.kind = class_choice(cls).kind;
    ct.k = k;
    ct.max_edges = max_e;
    ct.max_vertices = max_v;
    ct.connected_only = connected;
    return ct;
}

int do_depth(const std::string& file, const std::string& mode, int budget_edges,
             std::int64_t budget_states, const std::string& witness_path, Format fmt,
             std::ostream& out, std::ostream& err) {
    echo(err, "depth",
         {{"mode", mode},
          {"budget-edges", std::to_string(budget_edges)},
          {"budget-states", std::to_string(budget_states)},
          {"witness", witness_path.empty() ? "-" : witness_path},
          {"format", fmt_name(fmt)},
          {"file", file}});
    IncidenceGraph inc = to_incidence(read_hg_file(file));
    SearchBudget budget{budget_edges, budget_states};
    DepthWitness w = mode == "shd" ? shd_exact(inc, budget) : hd_exact(inc, budget);
    std::string ef_text = write_ef(w.forest, inc);
    if (!witness_path.empty()) {
        std::ofstream os(witness_path);
        if (!os) throw std::invalid_argument("cannot write " + witness_path);
        os << ef_text;
    }
    switch (fmt) {
        case Format::Human:
            out << w.depth << '\n' << ef_text;
            break;
        case Format::Tsv:
            out << mode << '\t' << w.depth << '\n';
            break;
        case Format::Json: {
            nlohmann::json j{{"schema", kSchema},
                             {"verb", "depth"},
                             {"mode", mode},
                             {"depth", w.depth},
                             {"witness", ef_text}};
            out << j.dump(2) << '\n';
            break;
        }
    }
    return 0;
}

int do_hom(const std::string& mode, const std::string& src, const std::string& tgt, Format fmt,
           std::ostream& out, std::ostream& err) {
    echo(err, "hom",
         {{"mode", mode}, {"format", fmt_name(fmt)}, {"source", src}, {"target", tgt}});
    Hypergraph f = read_hg_file(src);
    Hypergraph g = read_hg_file(tgt);
    Count c = mode == "hg" ? count_hg_homs(f, g)
                           : count_ig_homs(to_incidence(f), to_incidence(g));
    switch (fmt) {
        case Format::Human:
            out << c.str() << '\n';
            break;
        case Format::Tsv:
            out << "count\t" << c.str() << '\n';
            break;
        case Format::Json: {
            nlohmann::json j{{"schema", kSchema}, {"verb", "hom"}, {"mode", mode},
                             {"count", c.str()}};
            out << j.dump(2) << '\n';
            break;
        }
    }
    return 0;
}

int do_homvec(const std::string& cls, int k, int max_e, int max_v, bool connected,
              const std::string& target_file, Format fmt, std::ostream& out, std::ostream& err) {
    echo(err, "homvec",
         {{"class", cls},
          {"k", std::to_string(k)},
          {"maxE", std::to_string(max_e)},
          {"maxV", std::to_string(max_v)},
          {"connected", yn(connected)},
          {"format", fmt_name(fmt)},
          {"target", target_file}});
    ClassTruncation ct = make_truncation(cls, k, max_e, max_v, connected);
    Hypergraph t = read_hg_file(target_file);
    HomVector hv =
        class_choice(cls).incidence ? hom_vector(ct, to_incidence(t)) : hom_vector(ct, t);
    switch (fmt) {
        case Format::Human:
            out << "# class=" << cls << " k=" << k << " maxE=" << max_e << " maxV=" << max_v
                << " connected=" << yn(connected) << " sources=" << hv.entries.size() << '\n';
            [[fallthrough]];
        case Format::Tsv:
            for (const auto& [key, c] : hv.entries) out << key << '\t' << c.str() << '\n';
            break;
        case Format::Json: {
            nlohmann::json entries = nlohmann::json::object();
            for (const auto& [key, c] : hv.entries) entries[key] = c.str();
            nlohmann::json j{{"schema", kSchema},  {"verb", "homvec"},
                             {"class", cls},       {"k", k},
                             {"maxE", max_e},      {"maxV", max_v},
                             {"connected", connected}, {"entries", entries}};
            out << j.dump(2) << '\n';
            break;
        }
    }
    return 0;
}

int do_indist(const std::string& cls, int k, int max_e, int max_v, bool connected,
              const std::string& file_a, const std::string& file_b, Format fmt, std::ostream& out,
              std::ostream& err) {
    echo(err, "indist",
         {{"class", cls},
          {"k", std::to_string(k)},
          {"maxE", std::to_string(max_e)},
          {"maxV", std::to_string(max_v)},
          {"connected", yn(connected)},
          {"format", fmt_name(fmt)},
          {"a", file_a},
          {"b", file_b}});
    ClassTruncation ct = make_truncation(cls, k, max_e, max_v, connected);
    Hypergraph a = read_hg_file(file_a);
    Hypergraph b = read_hg_file(file_b);
    IndistVerdict v = class_choice(cls).incidence
                          ? indistinguishable(ct, to_incidence(a), to_incidence(b))
                          : indistinguishable(ct, a, b);
    switch (fmt) {
        case Format::Human:
            if (v.equal) {
                out << "equal up to (maxE=" << max_e << ", maxV=" << max_v << ")\n";
            } else {
                out << "distinguished by " << v.witness_key << ": " << v.count_a.str() << " vs "
                    << v.count_b.str() << '\n'
                    << write_hg(*v.witness);
            }
            break;
        case Format::Tsv:
            if (v.equal)
                out << "equal\t" << max_e << '\t' << max_v << '\n';
            else
                out << "distinguished\t" << v.witness_key << '\t' << v.count_a.str() << '\t'
                    << v.count_b.str() << '\n';
            break;
        case Format::Json: {
            nlohmann::json j{{"schema", kSchema}, {"verb", "indist"}, {"class", cls},
                             {"k", k},            {"maxE", max_e},    {"maxV", max_v},
                             {"connected", connected}, {"equal", v.equal}};
            if (!v.equal) {
                j["witness_key"] = v.witness_key;
                j["count_a"] = v.count_a.str();
                j["count_b"] = v.count_b.str();
                j["witness_hg"] = write_hg(*v.witness);
            }
            out << j.dump(2) << '\n';
            break;
        }
    }
    return v.equal ? 0 : 3;
}

int do_gli(const std::string& file, Format fmt, std::ostream& out, std::ostream& err) {
    echo(err, "gli", {{"format", fmt_name(fmt)}, {"script", file}});
    GliReplay rp = replay_gli_file(file);
    if (rp.steps.empty()) {
        err << "error: script defines no steps\n";
        return 2;
    }
    const Derivation& fin = rp.steps.back().d;
    bool lf = label_free(fin->result);
    std::string cls = "GLI_" + std::to_string(rp.k) + "^" + std::to_string(fin->cost);
    switch (fmt) {
        case Format::Human:
            for (const auto& s : rp.steps)
                out << "step " << s.name << ": cost " << s.d->cost << '\n';
            out << "k: " << rp.k << '\n'
                << "final cost: " << fin->cost << '\n'
                << "label-free: " << yn(lf) << '\n'
                << "class: " << cls << '\n';
            break;
        case Format::Tsv:
            for (const auto& s : rp.steps) out << s.name << '\t' << s.d->cost << '\n';
            out << "class\t" << cls << '\t' << yn(lf) << '\n';
            break;
        case Format::Json: {
            nlohmann::json steps = nlohmann::json::array();
            for (const auto& s : rp.steps)
                steps.push_back(nlohmann::json{{"name", s.name}, {"cost", s.d->cost}});
            nlohmann::json j{{"schema", kSchema},    {"verb", "gli"},
                             {"k", rp.k},            {"final_cost", fin->cost},
                             {"label_free", lf},     {"class", cls},
                             {"steps", steps}};
            out << j.dump(2) << '\n';
            break;
        }
    }
    return 0;
}

// "v1=a" / "1=a" bindings for --nu-v and --nu-e, resolved against the
// model's vertex resp. edge names.
std::map<int, int> parse_nu(const std::vector<std::string>& specs, char kind,
                            const IncidenceGraph& g) {
    std::map<int, int> nu;
    for (const auto& s : specs) {
        auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == s.size())
            throw std::invalid_argument(std::string("binding must look like ") + kind +
                                        "1=<name>: " + s);
        std::string var = s.substr(0, eq);
        std::string name = s.substr(eq + 1);
        if (var[0] == kind) var.erase(0, 1);
        int idx = 0;
        try {
            size_t pos = 0;
            idx = std::stoi(var, &pos);
            if (pos != var.size()) throw std::invalid_argument(var);
        } catch (...) {
            throw std::invalid_argument("bad variable index in binding: " + s);
        }
        if (idx < 1) throw std::invalid_argument("variable indices start at 1: " + s);
        std::optional<int> t = kind == 'v' ? g.red_index(name) : g.blue_index(name);
        if (!t)
            throw std::invalid_argument(
                std::string(kind == 'v' ? "unknown vertex in binding: " : "unknown edge in binding: ") + s);
        nu[idx] = *t;
    }
    return nu;
}

int do_gck_eval(int k, const std::string& formula_file, const std::string& model_file,
                const std::vector<std::string>& nu_v, const std::vector<std::string>& nu_e,
                Format fmt, std::ostream& out, std::ostream& err) {
    echo(err, "gck eval",
         {{"k", std::to_string(k)},
          {"formula", formula_file},
          {"model", model_file},
          {"nu-v", join(nu_v)},
          {"nu-e", join(nu_e)},
          {"format", fmt_name(fmt)}});
    FormulaPtr phi = parse_formula_file(formula_file);
    LogicVerdict wf = wellformed_gck(phi, k);
    if (!wf.ok) {
        err << "error: formula is not wellformed at k=" << k << '\n';
        for (const auto& v : wf.violations) err << "  - " << v << '\n';
        return 2;
    }
    Interpretation interp;
    interp.graph = to_incidence(read_hg_file(model_file));
    interp.nu_v = parse_nu(nu_v, 'v', interp.graph);
    interp.nu_e = parse_nu(nu_e, 'e', interp.graph);
    bool value = eval(phi, interp);
    switch (fmt) {
        case Format::Human:
        case Format::Tsv:
            out << yn(value) << '\n';
            break;
        case Format::Json: {
            nlohmann::json j{{"schema", kSchema}, {"verb", "gck eval"}, {"k", k},
                             {"value", value}};
            out << j.dump(2) << '\n';
            break;
        }
    }
    return 0;
}

int do_gck_check(int k, const std::string& formula_file, Format fmt, std::ostream& out,
                 std::ostream& err) {
    echo(err, "gck check",
         {{"k", std::to_string(k)}, {"formula", formula_file}, {"format", fmt_name(fmt)}});
    FormulaPtr phi = parse_formula_file(formula_file);
    LogicVerdict wf = wellformed_gck(phi, k);
    LogicVerdict rg = is_rgc(phi, k);
    int gd = guard_depth(phi);
    int size = ast_size(phi);
    switch (fmt) {
        case Format::Human:
            out << "wellformed: " << yn(wf.ok) << '\n';
            for (const auto& v : wf.violations) out << "  - " << v << '\n';
            out << "rgc: " << yn(rg.ok) << '\n';
            for (const auto& v : rg.violations) out << "  - " << v << '\n';
            out << "guard-depth: " << gd << '\n' << "size: " << size << '\n';
            break;
        case Format::Tsv:
            out << "wellformed\t" << (wf.ok ? 1 : 0) << '\n'
                << "rgc\t" << (rg.ok ? 1 : 0) << '\n'
                << "guard-depth\t" << gd << '\n'
                << "size\t" << size << '\n';
            break;
        case Format::Json: {
            nlohmann::json j{{"schema", kSchema},
                             {"verb", "gck check"},
                             {"k", k},
                             {"wellformed", wf.ok},
                             {"wellformed_violations", wf.violations},
                             {"rgc", rg.ok},
                             {"rgc_violations", rg.violations},
                             {"guard_depth", gd},
                             {"size", size}};
            out << j.dump(2) << '\n';
            break;
        }
    }
    return wf.ok ? 0 : 3;
}

int do_gck_pool(int k, int d, int size_bound, unsigned seed, Format fmt, std::ostream& out,
                std::ostream& err) {
    echo(err, "gck pool",
         {{"k", std::to_string(k)},
          {"d", std::to_string(d)},
          {"size", std::to_string(size_bound)},
          {"seed", std::to_string(seed)},
          {"format", fmt_name(fmt)}});
    std::vector<FormulaPtr> pool = sentence_pool(k, d, size_bound, seed);
    switch (fmt) {
        case Format::Human:
        case Format::Tsv:
            for (const auto& phi : pool) out << render(phi) << '\n';
            break;
        case Format::Json: {
            nlohmann::json sentences = nlohmann::json::array();
            for (const auto& phi : pool) sentences.push_back(render(phi));
            nlohmann::json j{{"schema", kSchema}, {"verb", "gck pool"},  {"k", k},
                             {"d", d},            {"size", size_bound},  {"seed", seed},
                             {"sentences", sentences}};
            out << j.dump(2) << '\n';
            break;
        }
    }
    return 0;
}

int do_families_list(std::ostream& out, std::ostream& err) {
    echo(err, "families list", {});
    out << "exampleG                three vertices, all pairs plus the full edge   1 output\n"
        << "exampleH                seven vertices, four pairwise-meeting edges    1 output\n"
        << "pathN                   the path with --n edges                        1 output\n"
        << "skew                    cycle pair with singleton edges (--k)          2 outputs\n"
        << "skewPrime               cycle pair with handle edges (--k)             2 outputs\n"
        << "skewDistinguisher       hom-count separator for skew (--k)             1 output\n"
        << "skewPrimeDistinguisher  separator for skewPrime (--k, --attach)        1 output\n";
    return 0;
}

int do_families_emit(const std::string& name, int k, int n, int attach,
                     const std::vector<std::string>& outs, std::ostream& out, std::ostream& err) {
    echo(err, "families emit",
         {{"name", name},
          {"k", std::to_string(k)},
          {"n", std::to_string(n)},
          {"attach", std::to_string(attach)},
          {"out", join(outs)}});
    std::vector<Hypergraph> gs;
    if (name == "exampleG") {
        gs = {example_G()};
    } else if (name == "exampleH") {
        gs = {example_H()};
    } else if (name == "pathN") {
        gs = {path(n)};
    } else if (name == "skew") {
        auto p = skew_pair(k);
        gs = {p.first, p.second};
    } else if (name == "skewPrime") {
        auto p = skew_pair_prime(k);
        gs = {p.first, p.second};
    } else if (name == "skewDistinguisher") {
        gs = {skew_distinguisher(k)};
    } else {
        gs = {to_hypergraph(skew_prime_distinguisher(k, attach))};
    }
    if (outs.size() != gs.size())
        throw std::invalid_argument(name + " emits " + std::to_string(gs.size()) +
                                    " hypergraph(s), but --out lists " +
                                    std::to_string(outs.size()) + " path(s)");
    for (size_t i = 0; i < gs.size(); ++i) {
        std::string text = write_hg(gs[i]);
        if (outs[i] == "-") {
            out << text;
        } else {
            std::ofstream os(outs[i]);
            if (!os) throw std::invalid_argument("cannot write " + outs[i]);
            os << text;
        }
    }
    return 0;
}

int do_repro(const std::string& check, const std::string& fixtures, Format fmt, std::ostream& out,
             std::ostream& err) {
    echo(err, "repro",
         {{"check", check}, {"fixtures", fixtures}, {"format", fmt_name(fmt)}});
    std::vector<ReproRow> rows = run_repro(check, fixtures);
    size_t passed = 0;
    long long total_ms = 0;
    for (const auto& r : rows) {
        passed += r.pass ? 1 : 0;
        total_ms += r.ms;
    }
    switch (fmt) {
        case Format::Human:
            for (const auto& r : rows)
                out << (r.pass ? "[PASS] " : "[FAIL] ") << r.check << " (criterion "
                    << r.criterion << ") " << r.claim << ": expected " << r.expected
                    << ", computed " << r.computed << '\n';
            break;
        case Format::Tsv:
            for (const auto& r : rows)
                out << r.check << '\t' << r.criterion << '\t' << (r.pass ? "PASS" : "FAIL")
                    << '\t' << r.claim << '\t' << r.expected << '\t' << r.computed << '\n';
            break;
        case Format::Json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : rows)
                arr.push_back(nlohmann::json{{"check", r.check},
                                             {"criterion", r.criterion},
                                             {"claim", r.claim},
                                             {"expected", r.expected},
                                             {"computed", r.computed},
                                             {"pass", r.pass},
                                             {"ms", r.ms}});
            nlohmann::json j{{"schema", kSchema}, {"verb", "repro"}, {"check", check},
                             {"rows", arr}};
            out << j.dump(2) << '\n';
            break;
        }
    }
    err << "# " << rows.size() << " rows, " << passed << " passed, " << (rows.size() - passed)
        << " failed, " << total_ms << " ms\n";
    return passed == rows.size() ? 0 : 3;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hypertree depth, homomorphism counts, k-labeled derivations and guarded "
                 "counting logic over hypergraphs",
                 "hgx"};
    app.require_subcommand(1);
    int rc = 0;
    Format fmt = Format::Human;

    auto add_format = [&fmt](CLI::App* sub) {
        sub->add_option("--format", fmt, "output format: human, tsv or json")
            ->transform(CLI::CheckedTransformer(kFormats));
    };

    std::string file, file_b, mode = "shd", cls = "SHD", witness, check = "all",
                fixtures = "fixtures", name, formula_file, model_file;
    int k = 1, max_e = 4, max_v = 6, n = 7, attach = 0, d = 1, size_bound = 30,
        budget_edges = 16;
    std::int64_t budget_states = 200'000'000;
    unsigned seed = 1;
    bool connected = false;
    std::vector<std::string> outs, nu_v, nu_e;

    CLI::App* depth = app.add_subcommand("depth", "depth of a hypergraph, with a witness forest");
    depth->add_option("--mode", mode, "shd (strict) or hd")
        ->required()
        ->check(CLI::IsMember({"shd", "hd"}));
    depth->add_option("--budget-edges", budget_edges, "search budget: max instance edges");
    depth->add_option("--budget-states", budget_states, "search budget: max visited states");
    depth->add_option("--witness", witness, "also write the witness forest to this .ef file");
    add_format(depth);
    depth->add_option("file", file, "instance (.hg)")->required();

    CLI::App* hom = app.add_subcommand("hom", "count homomorphisms between two hypergraphs");
    hom->add_option("--mode", mode, "hg (image equals content) or ig (image included)")
        ->required()
        ->check(CLI::IsMember({"hg", "ig"}));
    add_format(hom);
    hom->add_option("source", file, "source (.hg)")->required();
    hom->add_option("target", file_b, "target (.hg)")->required();

    auto add_class_flags = [&](CLI::App* sub) {
        sub->add_option("--class", cls, "source class: SHD, HD, ISHD or IHD")
            ->required()
            ->check(CLI::IsMember({"SHD", "HD", "ISHD", "IHD"}));
        sub->add_option("--k", k, "depth bound of the class")->check(CLI::PositiveNumber);
        sub->add_option("--maxE", max_e, "truncation: max source edges")
            ->check(CLI::PositiveNumber);
        sub->add_option("--maxV", max_v, "truncation: max source vertices")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--connected", connected, "restrict sources to connected instances");
        add_format(sub);
    };

    CLI::App* homvec = app.add_subcommand(
        "homvec", "hom counts from every source of a truncated depth class");
    add_class_flags(homvec);
    homvec->add_option("target", file, "target (.hg)")->required();

    CLI::App* indist = app.add_subcommand(
        "indist", "compare two instances over a truncated depth class");
    add_class_flags(indist);
    indist->add_option("a", file, "first instance (.hg)")->required();
    indist->add_option("b", file_b, "second instance (.hg)")->required();

    CLI::App* gli = app.add_subcommand("gli", "replay a derivation script");
    add_format(gli);
    gli->add_option("script", file, "derivation script (.gli)")->required();

    CLI::App* gck = app.add_subcommand("gck", "guarded counting logic");
    gck->require_subcommand(1);
    CLI::App* gck_eval = gck->add_subcommand("eval", "evaluate a formula on a model");
    gck_eval->add_option("--k", k, "edge-variable bound")->check(CLI::PositiveNumber);
    gck_eval->add_option("--formula", formula_file, "formula file (.gcl)")->required();
    gck_eval->add_option("--model", model_file, "model (.hg)")->required();
    gck_eval->add_option("--nu-v", nu_v, "free vertex-variable binding, e.g. v1=a");
    gck_eval->add_option("--nu-e", nu_e, "free edge-variable binding, e.g. e1=l");
    add_format(gck_eval);
    CLI::App* gck_check = gck->add_subcommand("check", "wellformedness and guard shape");
    gck_check->add_option("--k", k, "edge-variable bound")->check(CLI::PositiveNumber);
    gck_check->add_option("--formula", formula_file, "formula file (.gcl)")->required();
    add_format(gck_check);
    CLI::App* gck_pool = gck->add_subcommand("pool", "deterministic probe sentences");
    gck_pool->add_option("--k", k, "edge-variable bound")->check(CLI::PositiveNumber);
    gck_pool->add_option("--d", d, "guard-depth bound")->check(CLI::PositiveNumber);
    gck_pool->add_option("--size", size_bound, "formula size bound")->check(CLI::PositiveNumber);
    gck_pool->add_option("--seed", seed, "generator seed");
    add_format(gck_pool);

    CLI::App* families = app.add_subcommand("families", "bundled instance families");
    families->require_subcommand(1);
    CLI::App* fam_list = families->add_subcommand("list", "list family names");
    CLI::App* fam_emit = families->add_subcommand("emit", "write family members as .hg");
    fam_emit->add_option("--name", name, "family name (see `families list`)")
        ->required()
        ->check(CLI::IsMember({"exampleG", "exampleH", "pathN", "skew", "skewPrime",
                               "skewDistinguisher", "skewPrimeDistinguisher"}));
    fam_emit->add_option("--k", k, "family parameter k")->check(CLI::PositiveNumber);
    fam_emit->add_option("--n", n, "edge count for pathN")->check(CLI::PositiveNumber);
    fam_emit->add_option("--attach", attach, "singleton index override, 0 = default");
    fam_emit->add_option("--out", outs, "output path(s), one per emitted hypergraph; - for stdout")
        ->required();

    CLI::App* repro = app.add_subcommand("repro", "named reproduction checks");
    repro->add_option("--check", check, "check id or `all` (see `repro --check list`)");
    repro->add_option("--fixtures", fixtures, "fixtures directory");
    add_format(repro);

    depth->callback([&] { rc = do_depth(file, mode, budget_edges, budget_states, witness, fmt,
                                        out, err); });
    hom->callback([&] { rc = do_hom(mode, file, file_b, fmt, out, err); });
    homvec->callback(
        [&] { rc = do_homvec(cls, k, max_e, max_v, connected, file, fmt, out, err); });
    indist->callback(
        [&] { rc = do_indist(cls, k, max_e, max_v, connected, file, file_b, fmt, out, err); });
    gli->callback([&] { rc = do_gli(file, fmt, out, err); });
    gck_eval->callback(
        [&] { rc = do_gck_eval(k, formula_file, model_file, nu_v, nu_e, fmt, out, err); });
    gck_check->callback([&] { rc = do_gck_check(k, formula_file, fmt, out, err); });
    gck_pool->callback([&] { rc = do_gck_pool(k, d, size_bound, seed, fmt, out, err); });
    fam_list->callback([&] { rc = do_families_list(out, err); });
    fam_emit->callback([&] { rc = do_families_emit(name, k, n, attach, outs, out, err); });
    repro->callback([&] {
        if (check == "list") {
            echo(err, "repro", {{"check", "list"}});
            for (const auto& id : repro_check_ids()) out << id << '\n';
            rc = 0;
            return;
        }
        rc = do_repro(check, fixtures, fmt, out, err);
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}

}  // namespace hgx
