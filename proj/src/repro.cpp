#include "hgx/repro.hpp"

#include <bit>
#include <chrono>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "hgx/canonical.hpp"
#include "hgx/derivation.hpp"
#include "hgx/elimination.hpp"
#include "hgx/errors.hpp"
#include "hgx/families.hpp"
#include "hgx/homcount.hpp"
#include "hgx/logic.hpp"

namespace hgx {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_between(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
}

// Wall-time cap per check, from GH_BUDGET_MS (unset: uncapped).
struct Budget {
    Clock::time_point start = Clock::now();
    long long cap_ms = -1;
    std::string check;

    void tick() const {
        if (cap_ms >= 0 && ms_between(start, Clock::now()) > cap_ms)
            throw BudgetError("check \"" + check + "\" exceeded GH_BUDGET_MS=" +
                              std::to_string(cap_ms));
    }
};

long long budget_ms_from_env() {
    const char* v = std::getenv("GH_BUDGET_MS");
    if (!v || !*v) return -1;
    try {
        return std::stoll(v);
    } catch (const std::exception&) {
        throw std::invalid_argument("GH_BUDGET_MS is not a number: " + std::string(v));
    }
}

const std::vector<Hypergraph>& cached_enum(int max_e, int max_v, bool conn) {
    static std::map<std::tuple<int, int, bool>, std::vector<Hypergraph>> cache;
    auto key = std::make_tuple(max_e, max_v, conn);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, enumerate_hypergraphs({max_e, max_v, conn})).first;
    return it->second;
}

struct Ctx {
    std::string check;
    std::string fixtures;
    std::vector<ReproRow>* rows;
    Budget budget;
    Clock::time_point row_start = Clock::now();

    void begin() { row_start = Clock::now(); }

    void add(int criterion, const std::string& claim, const std::string& expected,
             const std::string& computed, bool pass) {
        rows->push_back({check, criterion, claim, expected, computed, pass,
                         ms_between(row_start, Clock::now())});
        begin();
    }
};

SearchBudget wide_budget() { return {16, 200'000'000}; }

std::string ratio(int total, int bad, const char* noun = "violations") {
    return std::to_string(total) + " instances, " + std::to_string(bad) + " " + noun;
}

// ---------------------------------------------------------------- criteria 1-2

void check_hd_paths(Ctx& c) {
    for (int n = 1; n <= 15; ++n) {
        c.budget.tick();
        int want = std::bit_width(static_cast<unsigned>(n + 2)) - 1;
        int got = hd_exact(to_incidence(path(n)), wide_budget()).depth;
        c.add(1, "hd of the " + std::to_string(n) + "-edge path equals floor(log2(n+2))",
              std::to_string(want), std::to_string(got), got == want);
    }
}

void check_example_depths(Ctx& c) {
    auto ig = to_incidence(example_G());
    auto ih = to_incidence(example_H());
    int hd_g = hd_exact(ig).depth;
    c.add(2, "hd of the 3-vertex example instance", "1", std::to_string(hd_g), hd_g == 1);
    int shd_g = shd_exact(ig).depth;
    c.add(2, "shd of the 3-vertex example instance", "2", std::to_string(shd_g), shd_g == 2);
    int shd_h = shd_exact(ih).depth;
    c.add(2, "shd of the 7-vertex example instance", "2", std::to_string(shd_h), shd_h == 2);
    auto ip15 = to_incidence(path(15));
    int shd_p = shd_exact(ip15, wide_budget()).depth;
    c.add(2, "shd of the 15-edge path", "4", std::to_string(shd_p), shd_p == 4);
    bool found = false, ok = false;
    int height = -1;
    for (auto& nf : fig2_forests()) {
        if (nf.name != "2d") continue;
        found = true;
        ok = validate_strict_ef(ip15, nf.ef).ok;
        height = nf.ef.forest.height();
    }
    c.add(2, "bundled forest \"2d\" is a strict elimination forest of the 15-edge path",
          "valid, height 4",
          found ? (std::string(ok ? "valid" : "invalid") + ", height " + std::to_string(height))
                : "missing",
          found && ok && height == 4);
}

// ---------------------------------------------------------------- criterion 3

void check_thm32(Ctx& c) {
    auto& conn = cached_enum(4, 6, true);
    int bad_ineq = 0, bad_strict = 0;
    for (auto& h : conn) {
        c.budget.tick();
        auto i = to_incidence(h);
        auto hd = hd_exact(i);
        int shd = shd_exact(i).depth;
        if (!(hd.depth <= shd && shd <= hd.depth + 1)) ++bad_ineq;
        auto s = strictify(i, hd.forest);
        int grow = s.forest.height() - hd.forest.forest.height();
        if (!validate_strict_ef(i, s).ok || grow < 0 || grow > 1) ++bad_strict;
    }
    int n = static_cast<int>(conn.size());
    c.add(3, "hd <= shd <= hd+1 on every connected instance within (4 edges, 6 vertices)",
          "0 violations", ratio(n, bad_ineq), bad_ineq == 0);
    c.add(3, "strictify validates strict with height increase 0 or 1 on the same sweep",
          "0 violations", ratio(n, bad_strict), bad_strict == 0);
}

// ---------------------------------------------------------------- criterion 4

unsigned content_mask(const std::vector<int>& content, const std::vector<int>& img) {
    unsigned m = 0;
    for (int v : content) m |= 1u << img[v];
    return m;
}

// Reference counters: full enumeration of both map components, no pruning.
template <bool Exact>
unsigned long long naive_count(const std::vector<std::vector<int>>& fc, int fv,
                               const std::vector<std::vector<int>>& gc, int gv) {
    int fe = static_cast<int>(fc.size()), ge = static_cast<int>(gc.size());
    std::vector<unsigned> gmask(ge);
    for (int e = 0; e < ge; ++e)
        for (int v : gc[e]) gmask[e] |= 1u << v;
    unsigned long long count = 0;
    std::vector<int> he(fe, 0);
    while (true) {
        std::vector<int> hv(fv, 0);
        while (true) {
            bool ok = true;
            for (int e = 0; e < fe && ok; ++e) {
                unsigned img = content_mask(fc[e], hv);
                unsigned tgt = gmask[he[e]];
                ok = Exact ? img == tgt : (img & ~tgt) == 0;
            }
            if (ok) ++count;
            int i = fv;
            while (i > 0 && hv[i - 1] + 1 == gv) --i;
            if (i == 0) break;
            ++hv[i - 1];
            for (int j = i; j < fv; ++j) hv[j] = 0;
        }
        int i = fe;
        while (i > 0 && he[i - 1] + 1 == ge) --i;
        if (i == 0) break;
        ++he[i - 1];
        for (int j = i; j < fe; ++j) he[j] = 0;
    }
    return count;
}

void check_oracles(Ctx& c) {
    auto& all4 = cached_enum(4, 6, false);
    int bad = 0;
    for (auto& h : all4) {
        c.budget.tick();
        auto i = to_incidence(h);
        if (shd_exact(i).depth != shd_bruteforce(i)) ++bad;
    }
    c.add(4, "recursive and brute-force strict depth agree on every instance within (4, 6)",
          "0 mismatches", ratio(static_cast<int>(all4.size()), bad, "mismatches"), bad == 0);

    auto& src = cached_enum(3, 6, false);
    std::mt19937 rng(20240817u);
    int pairs = 200, bad_hg = 0, bad_ig = 0;
    for (int t = 0; t < pairs; ++t) {
        c.budget.tick();
        auto& f = src[rng() % src.size()];
        auto& g = all4[rng() % all4.size()];
        if (count_hg_homs(f, g) !=
            naive_count<true>(f.content, f.n_vertices(), g.content, g.n_vertices()))
            ++bad_hg;
        auto fi = to_incidence(f), gi = to_incidence(g);
        if (count_ig_homs(fi, gi) !=
            naive_count<false>(fi.content, fi.n_reds(), gi.content, gi.n_reds()))
            ++bad_ig;
    }
    c.add(4, "hypergraph hom counts match the full-enumeration reference on 200 seeded pairs",
          "0 mismatches", std::to_string(pairs) + " pairs, " + std::to_string(bad_hg) +
              " mismatches", bad_hg == 0);
    c.add(4, "incidence hom counts match the full-enumeration reference on the same pairs",
          "0 mismatches", std::to_string(pairs) + " pairs, " + std::to_string(bad_ig) +
              " mismatches", bad_ig == 0);
}

// ---------------------------------------------------------------- criterion 5

void check_thm41(Ctx& c) {
    auto& conn = cached_enum(4, 6, true);
    int n = 0, bad = 0;
    for (auto& h : conn) {
        c.budget.tick();
        auto i = to_incidence(h);
        auto w = shd_exact(i);
        if (w.depth > 3) continue;
        ++n;
        auto d = build_from_strict_ef(i, w.forest, 3);
        bool ok = label_free(d->result) && d->cost <= 3 &&
                  canonical_form(d->result.skeleton) == canonical_form(i);
        if (ok) {
            auto ef = extract_forest(d);
            ok = validate_strict_ef(d->result.skeleton, ef).ok && ef.forest.height() <= 3;
        }
        if (!ok) ++bad;
    }
    c.add(5,
          "every connected instance with strict depth <= 3 rebuilds to a label-free "
          "derivation of cost <= 3 whose extracted forest validates strict at height <= 3",
          "0 failures", ratio(n, bad, "failures"), bad == 0);
}

// ---------------------------------------------------------------- criterion 6

void check_appendix_d(Ctx& c) {
    auto rep = replay_gli_file(c.fixtures + "/appendix_p7.gli");
    std::string trace, want = "0 0 0 0 0 1 1 1 1 0 1 1 1 2 1 2 2 2 3";
    for (auto& s : rep.steps) {
        if (!trace.empty()) trace += " ";
        trace += std::to_string(s.d->cost);
    }
    c.add(6, "per-step cost indices of the scripted 7-edge-path derivation", want, trace,
          trace == want);
    auto& fin = *rep.steps.back().d;
    bool cls = fin.cost == 3 && rep.k == 3 && label_free(fin.result);
    c.add(6, "final object is label-free with cost 3 over 3 labels", "cost 3, 3 labels",
          "cost " + std::to_string(fin.cost) + ", " + std::to_string(rep.k) + " labels" +
              (label_free(fin.result) ? "" : ", labels left"),
          cls);
    bool iso = canonical_form(fin.result.skeleton) == canonical_form(to_incidence(path(7)));
    c.add(6, "final skeleton is isomorphic to the 7-edge path", "isomorphic",
          iso ? "isomorphic" : "different", iso);
    auto ef = extract_forest(rep.steps.back().d);
    bool ok = validate_strict_ef(fin.result.skeleton, ef).ok;
    c.add(6, "extracted forest validates strict at height 3", "valid, height 3",
          std::string(ok ? "valid" : "invalid") + ", height " +
              std::to_string(ef.forest.height()),
          ok && ef.forest.height() == 3);
}

// ----------------------------------------------------------- criteria 7 and 8

void check_skew(Ctx& c) {
    auto [g1, h1] = skew_pair(1);
    ClassTruncation shd1{TruncationKind::Shd, 1, 3, 6, false, {}};
    auto vg = hom_vector(shd1, g1);
    auto vh = hom_vector(shd1, h1);
    c.add(7,
          "hom vectors of the two 4-cycle-with-singletons instances agree over all "
          "strict-depth-1 sources within (3 edges, 6 vertices)",
          "equal", vg == vh ? "equal" : "different", vg == vh);
    c.budget.tick();
    ClassTruncation hd1{TruncationKind::Hd, 1, 3, 6, false, {}};
    auto verdict = indistinguishable(hd1, g1, h1);
    c.add(7, "a depth-1 source distinguishes the same pair",
          "counts differ",
          verdict.equal ? "all counts equal"
                        : verdict.count_a.str() + " vs " + verdict.count_b.str(),
          !verdict.equal);
    auto d1 = skew_distinguisher(1);
    auto ca = count_hg_homs(d1, g1), cb = count_hg_homs(d1, h1);
    int dhd = hd_exact(to_incidence(d1)).depth;
    c.add(7, "the bundled depth-1 distinguisher counts 4 vs 2",
          "hd 1, counts 4 vs 2",
          "hd " + std::to_string(dhd) + ", counts " + ca.str() + " vs " + cb.str(),
          dhd == 1 && ca == 4 && cb == 2);

    c.budget.tick();
    auto [gp, hp] = skew_pair_prime(1);
    auto vgp = hom_vector(hd1, gp);
    auto vhp = hom_vector(hd1, hp);
    c.add(8,
          "hom vectors of the two 4-cycle-with-handles instances agree over all "
          "depth-1 sources within (3 edges, 6 vertices)",
          "equal", vgp == vhp ? "equal" : "different", vgp == vhp);
    c.budget.tick();
    ClassTruncation ihd1{TruncationKind::Ihd, 1, 3, 6, false, {}};
    auto iverd = indistinguishable(ihd1, to_incidence(gp), to_incidence(hp));
    c.add(8, "an incidence-graph source of depth 1 distinguishes the same pair",
          "counts differ",
          iverd.equal ? "all counts equal"
                      : iverd.count_a.str() + " vs " + iverd.count_b.str(),
          !iverd.equal);
    auto pd = skew_prime_distinguisher(1, 2);
    auto ia = count_ig_homs(pd, to_incidence(gp)), ib = count_ig_homs(pd, to_incidence(hp));
    int phd = hd_exact(pd).depth;
    c.add(8, "the bundled incidence distinguisher (attachment 2) counts 134 vs 132",
          "hd 1, counts 134 vs 132",
          "hd " + std::to_string(phd) + ", counts " + ia.str() + " vs " + ib.str(),
          phd == 1 && ia == 134 && ib == 132);
}

// ---------------------------------------------------------------- criterion 9

void check_closures(Ctx& c) {
    auto& all4 = cached_enum(4, 6, false);
    std::mt19937 rng(20250823u);
    int done = 0, bad = 0;
    while (done < 100) {
        c.budget.tick();
        auto& h = all4[rng() % all4.size()];
        std::vector<int> fat;
        for (int e = 0; e < h.n_edges(); ++e)
            if (h.content[e].size() >= 2) fat.push_back(e);
        if (fat.empty()) continue;
        int e = fat[rng() % fat.size()];
        auto& content = h.content[e];
        int ui = static_cast<int>(rng() % content.size());
        int vi = static_cast<int>(rng() % content.size());
        if (ui == vi) continue;
        auto merged = local_merge(h, h.edge_names[e], h.vertex_names[content[ui]],
                                  h.vertex_names[content[vi]]);
        auto i0 = to_incidence(h), i1 = to_incidence(merged);
        if (shd_exact(i1).depth > shd_exact(i0).depth ||
            hd_exact(i1).depth > hd_exact(i0).depth)
            ++bad;
        ++done;
    }
    c.add(9, "merging two vertices inside a hyperedge never raises hd or shd (100 samples)",
          "0 violations", ratio(done, bad), bad == 0);
    auto d1 = skew_distinguisher(1);
    int before = hd_exact(to_incidence(d1)).depth;
    auto pumped = pump(d1, "fp", "q");
    int after = hd_exact(to_incidence(pumped)).depth;
    c.add(9, "pumping a fresh vertex into a singleton edge of the depth-1 distinguisher "
             "raises hd from 1 to 2",
          "1 -> 2", std::to_string(before) + " -> " + std::to_string(after),
          before == 1 && after == 2);
}

// --------------------------------------------------------------- criterion 10

IncidenceGraph relabelled(const IncidenceGraph& i, std::mt19937& rng) {
    std::vector<std::string> reds(i.n_reds()), blues(i.n_blues());
    std::vector<int> rp(i.n_reds()), bp(i.n_blues());
    for (int k = 0; k < i.n_reds(); ++k) rp[k] = k;
    for (int k = 0; k < i.n_blues(); ++k) bp[k] = k;
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(bp.begin(), bp.end(), rng);
    for (int k = 0; k < i.n_reds(); ++k) reds[k] = "r" + std::to_string(rp[k]);
    for (int k = 0; k < i.n_blues(); ++k) blues[k] = "s" + std::to_string(bp[k]);
    std::vector<std::pair<std::string, std::vector<std::string>>> bl;
    for (int b = 0; b < i.n_blues(); ++b) {
        std::vector<std::string> content;
        for (int r : i.content[b]) content.push_back(reds[r]);
        bl.emplace_back(blues[b], std::move(content));
    }
    return IncidenceGraph::make(reds, std::move(bl));
}

void check_logic(Ctx& c) {
    auto phi = parse_formula_file(c.fixtures + "/phi_g.gcl");
    int gd = guard_depth(phi);
    bool wf = wellformed_gck(phi, 1).ok;
    c.add(10, "the bundled characterising sentence has guard depth 2 and is well formed "
              "with one edge variable",
          "gd 2, well formed",
          "gd " + std::to_string(gd) + (wf ? ", well formed" : ", rejected"), gd == 2 && wf);
    bool on_g = eval(phi, {to_incidence(example_G()), {}, {}});
    bool on_h = eval(phi, {to_incidence(example_H()), {}, {}});
    c.add(10, "the sentence holds on the 3-vertex example and fails on the 7-vertex one",
          "true / false",
          std::string(on_g ? "true" : "false") + " / " + (on_h ? "true" : "false"),
          on_g && !on_h);
    auto pool = sentence_pool(1, 2, 30, 99u);
    auto& src = cached_enum(3, 6, false);
    std::mt19937 rng(99u);
    int bad = 0, trials = 100;
    for (int t = 0; t < trials; ++t) {
        c.budget.tick();
        auto& f = pool[t % pool.size()];
        auto i = to_incidence(src[rng() % src.size()]);
        auto j = relabelled(i, rng);
        if (eval(f, {i, {}, {}}) != eval(f, {j, {}, {}})) ++bad;
    }
    c.add(10, "evaluation is invariant under relabelling on 100 seeded triples",
          "0 disagreements", std::to_string(trials) + " triples, " + std::to_string(bad) +
              " disagreements", bad == 0);
}

// --------------------------------------------------------------- criterion 11

void check_indist_probe(Ctx& c) {
    auto [g1, h1] = skew_pair(1);
    auto ig = to_incidence(g1), ih = to_incidence(h1);
    auto pool = sentence_pool(1, 1, 25, 424242u);
    int bad = 0;
    for (auto& f : pool) {
        c.budget.tick();
        if (eval(f, {ig, {}, {}}) != eval(f, {ih, {}, {}})) ++bad;
    }
    c.add(11,
          "no guard-depth-1 sentence from the seeded pool separates the two "
          "4-cycle-with-singletons instances",
          "0 of " + std::to_string(pool.size()) + " sentences distinguish",
          std::to_string(bad) + " of " + std::to_string(pool.size()) + " sentences distinguish",
          bad == 0);
}

// --------------------------------------------------------------- criterion 12

void check_surjections(Ctx& c) {
    auto& conn = cached_enum(4, 6, true);
    for (int k = 1; k <= 2; ++k) {
        int n_shd = 0, bad_shd = 0, n_hd = 0, bad_hd = 0;
        int p_strict = 1 << k, p_plain = (1 << (k + 1)) - 2;
        for (auto& h : conn) {
            c.budget.tick();
            auto i = to_incidence(h);
            if (shd_exact(i).depth <= k) {
                ++n_shd;
                if (surjective_hom_exists(h, p_strict)) ++bad_shd;
            }
            if (hd_exact(i).depth <= k) {
                ++n_hd;
                if (surjective_hom_exists(h, p_plain)) ++bad_hd;
            }
        }
        c.add(12,
              "no connected instance with strict depth <= " + std::to_string(k) +
                  " surjects onto the " + std::to_string(p_strict) + "-edge path",
              "0 violations", ratio(n_shd, bad_shd), bad_shd == 0);
        c.add(12,
              "no connected instance with depth <= " + std::to_string(k) +
                  " surjects onto the " + std::to_string(p_plain) + "-edge path",
              "0 violations", ratio(n_hd, bad_hd), bad_hd == 0);
    }
}

using CheckFn = void (*)(Ctx&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> r = {
        {"hd-paths", check_hd_paths},
        {"example-depths", check_example_depths},
        {"thm-3.2", check_thm32},
        {"oracles", check_oracles},
        {"thm-4.1", check_thm41},
        {"appendix-d", check_appendix_d},
        {"skew-k1", check_skew},
        {"closures", check_closures},
        {"logic-phi-g", check_logic},
        {"indist-probe", check_indist_probe},
        {"path-surjections", check_surjections},
    };
    return r;
}

}  // namespace

std::vector<std::string> repro_check_ids() {
    std::vector<std::string> ids;
    for (auto& [id, fn] : registry()) {
        (void)fn;
        ids.push_back(id);
    }
    ids.push_back("all");
    return ids;
}

std::vector<ReproRow> run_repro(const std::string& check, const std::string& fixtures_dir) {
    long long cap = budget_ms_from_env();
    std::vector<ReproRow> rows;
    bool found = false;
    for (auto& [id, fn] : registry()) {
        if (check != "all" && check != id) continue;
        found = true;
        Ctx c{id, fixtures_dir, &rows, Budget{Clock::now(), cap, id}};
        c.begin();
        fn(c);
    }
    if (!found) throw std::invalid_argument("unknown repro check: " + check);
    return rows;
}

}  // namespace hgx
