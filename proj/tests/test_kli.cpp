#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#include "hgx/canonical.hpp"
#include "hgx/derivation.hpp"
#include "hgx/elimination.hpp"
#include "hgx/errors.hpp"
#include "hgx/families.hpp"
#include "hgx/hypergraph.hpp"
#include "hgx/io.hpp"
#include "hgx/kli.hpp"

using namespace hgx;

namespace {

IncidenceGraph edge12() { return to_incidence(path(1)); }  // reds 1,2; blue e1

KLabeledIncidenceGraph base_left() {
    return make_kli(edge12(), 2, {{1, "1"}, {2, "2"}}, {{1, "e1"}}, {{1, 1}, {2, 1}});
}

KLabeledIncidenceGraph base_right() {
    IncidenceGraph s = IncidenceGraph::make({"2", "3"}, {{"f", {"2", "3"}}});
    return make_kli(s, 2, {{2, "2"}, {3, "3"}}, {{2, "f"}}, {{2, 2}, {3, 2}});
}

}  // namespace

TEST_CASE("make_kli validates labels") {
    IncidenceGraph s = edge12();
    CHECK_NOTHROW(make_kli(s, 1, {{1, "1"}}, {{1, "e1"}}, {{1, 1}}));
    CHECK_THROWS_AS(make_kli(s, 1, {}, {{2, "e1"}}, {}), std::invalid_argument);  // blue > k
    CHECK_THROWS_AS(make_kli(s, 1, {}, {{0, "e1"}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_kli(s, 1, {{0, "1"}}, {}, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_kli(s, 1, {{1, "nope"}}, {}, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_kli(s, 1, {{1, "1"}}, {}, {}), std::invalid_argument);  // dom(g) != dom(r)
    CHECK_THROWS_AS(make_kli(s, 1, {{1, "1"}}, {}, {{1, 2}}), std::invalid_argument);  // guard > k
}

TEST_CASE("label predicates") {
    KLabeledIncidenceGraph l = base_left();
    CHECK(!label_free(l));
    CHECK(real_guards(l));
    KLabeledIncidenceGraph bare = make_kli(edge12(), 2, {}, {}, {});
    CHECK(label_free(bare));
    CHECK(real_guards(bare));  // vacuous
    // guard points at an unlabeled blue: not real
    KLabeledIncidenceGraph fake = make_kli(edge12(), 2, {{1, "1"}}, {}, {{1, 1}});
    CHECK(!real_guards(fake));
    // guard points at a labeled blue that is not adjacent
    IncidenceGraph two = IncidenceGraph::make({"x", "y"}, {{"e", {"x"}}, {"f", {"y"}}});
    KLabeledIncidenceGraph far = make_kli(two, 2, {{1, "x"}}, {{2, "f"}}, {{1, 2}});
    CHECK(!real_guards(far));
}

TEST_CASE("label changes and removals") {
    KLabeledIncidenceGraph bare = make_kli(edge12(), 2, {}, {}, {});
    KLabeledIncidenceGraph l = set_blue_labels(bare, {1}, {"e1"});
    l = set_red_labels(l, {1, 2}, {"1", "2"}, {1, 1});
    CHECK(l.r == std::map<int, int>{{1, 0}, {2, 1}});
    CHECK(l.g == std::map<int, int>{{1, 1}, {2, 1}});
    CHECK_THROWS_AS(set_red_labels(bare, {2, 1}, {"1", "2"}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(set_blue_labels(bare, {1, 1}, {"e1", "e1"}), std::invalid_argument);

    KLabeledIncidenceGraph relabeled = set_red_labels(l, {1}, {"2"}, {1});  // overwrite
    CHECK(relabeled.r.at(1) == 1);

    KLabeledIncidenceGraph no_red = remove_red(l, {1});
    CHECK(no_red.r == std::map<int, int>{{2, 1}});
    CHECK(no_red.g == std::map<int, int>{{2, 1}});  // guard of 1 dropped with it
    CHECK(no_red.skeleton.n_reds() == 2);
    CHECK_THROWS_AS(remove_red(l, {3}), std::invalid_argument);
    CHECK_THROWS_AS(remove_blue(l, {2}), std::invalid_argument);
    CHECK(remove_blue(l, {1}).b.empty());
}

TEST_CASE("glue merges equally labeled vertices") {
    // shared red label 2 and no shared blue label: a two-edge path appears
    KLabeledIncidenceGraph l1 = base_left();
    KLabeledIncidenceGraph l2 = base_right();
    GlueResult gr = glue(l1, l2);
    CHECK(gr.graph.skeleton.n_reds() == 3);
    CHECK(gr.graph.skeleton.n_blues() == 2);
    CHECK(gr.graph.r.size() == 3);
    CHECK(gr.graph.g == std::map<int, int>{{1, 1}, {2, 1}, {3, 2}});  // g1 wins on 2

    // the merge maps embed each operand homomorphically
    for (int o = 0; o < 2; ++o) {
        const IncidenceGraph& s = (o == 0 ? l1 : l2).skeleton;
        for (int e = 0; e < s.n_blues(); ++e) {
            int te = gr.maps.blue_map[o][e];
            const auto& tc = gr.graph.skeleton.content[te];
            for (int r : s.content[e]) {
                int tr = gr.maps.red_map[o][r];
                CHECK(std::find(tc.begin(), tc.end(), tr) != tc.end());
            }
        }
    }

    // a shared blue label merges the hyperedges themselves
    KLabeledIncidenceGraph l2b = make_kli(IncidenceGraph::make({"2", "3"}, {{"f", {"2", "3"}}}),
                                          2, {{2, "2"}, {3, "3"}}, {{1, "f"}}, {{2, 1}, {3, 1}});
    GlueResult gr2 = glue(l1, l2b);
    CHECK(gr2.graph.skeleton.n_reds() == 3);
    CHECK(gr2.graph.skeleton.n_blues() == 1);
    CHECK(gr2.graph.skeleton.content[0].size() == 3);

    // deterministic: replaying the same glue yields byte-identical names
    GlueResult gr3 = glue(l1, l2);
    CHECK(gr3.graph.skeleton.red_names == gr.graph.skeleton.red_names);
    CHECK(gr3.graph.skeleton.blue_names == gr.graph.skeleton.blue_names);
}

TEST_CASE("glue is commutative and associative up to isomorphism") {
    KLabeledIncidenceGraph l1 = base_left();
    KLabeledIncidenceGraph l2 = base_right();
    KLabeledIncidenceGraph l3 = make_kli(IncidenceGraph::make({"4"}, {{"s", {"4"}}}), 2,
                                         {{3, "4"}}, {{2, "s"}}, {{3, 2}});
    CHECK(isomorphic(glue(l1, l2).graph.skeleton, glue(l2, l1).graph.skeleton));
    CHECK(isomorphic(glue(glue(l1, l2).graph, l3).graph.skeleton,
                     glue(l1, glue(l2, l3).graph).graph.skeleton));
}

TEST_CASE("transition graphs and applicability") {
    TransitionFn f{{1, 2}, {2, 2}};
    KLabeledIncidenceGraph m = m_f(f, 2);
    CHECK(m.skeleton.n_reds() == 2);
    CHECK(m.skeleton.n_blues() == 1);  // one blue per value in img(f)
    CHECK(m.g == f);
    CHECK(real_guards(m));
    CHECK(label_free(m) == false);

    std::map<int, int> g{{1, 1}, {2, 1}};
    CHECK(is_transition(TransitionFn{{1, 2}}, g));           // img(f)={2} misses every g-value
    CHECK(is_transition(TransitionFn{{1, 1}}, g) == false);  // g(2)=1 in img(f), 2 not in dom
    CHECK(is_transition(TransitionFn{{1, 1}, {2, 1}}, g));
    CHECK(is_transition(TransitionFn{}, g) == false);        // empty dom
    CHECK(is_transition(TransitionFn{{3, 1}}, g) == false);  // dom not within dom(g)

    KLabeledIncidenceGraph l = base_left();
    TransitionFn shift{{1, 1}, {2, 2}};
    CHECK(transition_removed_blues(l, shift) == std::vector<int>{1});
    KLabeledIncidenceGraph after = apply_transition(l, shift);
    CHECK(after.g == shift);
    CHECK(after.skeleton.n_blues() == 3);  // e1 plus the two transition blues
    CHECK(after.b.size() == 2);
    CHECK(after.r.size() == 2);
    CHECK(real_guards(after));
}

TEST_CASE("derivation rules enforce side conditions and cost") {
    CHECK_THROWS_AS(derive_base(make_kli(edge12(), 2, {}, {{1, "e1"}}, {})),
                    std::invalid_argument);  // unlabeled reds
    CHECK_THROWS_AS(derive_base(make_kli(edge12(), 2, {{1, "1"}, {2, "2"}}, {}, {{1, 1}, {2, 1}})),
                    std::invalid_argument);  // unlabeled blue, guards not real
    Derivation left = derive_base(base_left());
    CHECK(left->cost == 0);
    Derivation right = derive_base(base_right());

    // incompatible guards: shared red label 2 points at different blue labels
    CHECK_THROWS_AS(derive_glue(left, right), std::invalid_argument);

    TransitionFn shift{{1, 1}, {2, 2}};
    Derivation moved = derive_transition(left, shift);
    CHECK(moved->cost == 1);  // blue label 1 was guarded and is torn down
    CHECK(moved->removed == std::vector<int>{1});

    Derivation glued = derive_glue(moved, right);
    CHECK(glued->cost == 1);
    CHECK(glued->result.skeleton.n_reds() == 3);

    CHECK_THROWS_AS(derive_remove_blue(glued, {2}), std::invalid_argument);  // still a guard
    Derivation bare_reds = derive_remove_red(glued, {1, 2, 3});
    CHECK(bare_reds->cost == 1);
    CHECK(bare_reds->result.r.empty());
    CHECK(bare_reds->result.g.empty());
    CHECK_THROWS_AS(derive_remove_red(bare_reds, {1}), std::invalid_argument);

    std::vector<int> blues;
    for (const auto& kv : bare_reds->result.b) blues.push_back(kv.first);
    Derivation done = derive_remove_blue(bare_reds, blues);
    CHECK(done->cost == 1 + static_cast<int>(blues.size()));
    CHECK(label_free(done->result));

    EliminationForest ef = extract_forest(done);
    CHECK(ef.forest.height() <= done->cost);
    CHECK(validate_strict_ef(done->result.skeleton, ef).ok);
}

TEST_CASE("strict forests compile to derivations and back") {
    for (const Hypergraph& h : {example_G(), path(3), path(7)}) {
        IncidenceGraph i = to_incidence(h);
        DepthWitness w = shd_exact(i);
        Derivation d = build_from_strict_ef(i, w.forest, w.depth);
        CHECK(label_free(d->result));
        CHECK(d->cost <= w.depth);
        CHECK(isomorphic(d->result.skeleton, i));
        EliminationForest back = extract_forest(d);
        CHECK(validate_strict_ef(d->result.skeleton, back).ok);
        CHECK(back.forest.height() <= d->cost);
    }
    IncidenceGraph ip7 = to_incidence(path(7));
    DepthWitness w7 = shd_exact(ip7);
    CHECK(build_from_strict_ef(ip7, w7.forest, 3)->cost == 3);
}

TEST_CASE("scripted replay of the seven-edge path derivation") {
    GliReplay rp = replay_gli_file(std::string(HGX_FIXTURES) + "/appendix_p7.gli");
    CHECK(rp.k == 3);
    REQUIRE(rp.steps.size() == 19);
    std::vector<int> want{0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 1, 1, 2, 1, 2, 2, 2, 3};
    for (size_t i = 0; i < rp.steps.size(); ++i) CHECK(rp.steps[i].d->cost == want[i]);
    const Derivation& fin = rp.steps.back().d;
    CHECK(fin->cost == 3);
    CHECK(label_free(fin->result));
    CHECK(isomorphic(fin->result.skeleton, to_incidence(path(7))));
    EliminationForest ef = extract_forest(fin);
    CHECK(validate_strict_ef(fin->result.skeleton, ef).ok);
    CHECK(ef.forest.height() == 3);
}

TEST_CASE("gli parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            replay_gli(in, HGX_FIXTURES);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("FROB x\n") == 1);
    CHECK(line_of("GLUE out a b\n") == 1);  // unknown operands
    std::string base =
        "BASE t4 p7_t4.hg r={1:s,2:t,3:u,4:v,5:w} b={1:d,2:b,3:a} g={1:3,2:2,3:2,4:1,5:1}\n";
    CHECK(line_of(base + "RMB bad t4 {1}\n") == 2);  // label 1 still guards
    CHECK(line_of(base + "RMR bad t4 {9}\n") == 2);  // label 9 unassigned
    CHECK(line_of(base + "BASE t4 p7_t4.hg r={} b={} g={}\n") == 2);  // unlabeled base
    CHECK(line_of(base) == -1);
}
