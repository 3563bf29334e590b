#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "hgx/canonical.hpp"
#include "hgx/elimination.hpp"
#include "hgx/errors.hpp"
#include "hgx/families.hpp"
#include "hgx/homcount.hpp"
#include "hgx/hypergraph.hpp"
#include "hgx/kli.hpp"

using namespace hgx;

namespace {

// Full enumeration of (h_E, h_V) pairs, no pruning; the oracle for the
// counting routines on tiny instances.
Count naive_count(const Hypergraph& f, const Hypergraph& g, bool exact_image) {
    int nv = f.n_vertices(), ne = f.n_edges();
    int mv = g.n_vertices(), me = g.n_edges();
    if (ne > 0 && me == 0) return 0;
    if (nv > 0 && mv == 0) return 0;
    std::vector<int> he(ne, 0), hv(nv, 0);
    Count total = 0;
    auto advance = [](std::vector<int>& digits, int base) {
        for (size_t i = 0; i < digits.size(); ++i) {
            if (++digits[i] < base) return true;
            digits[i] = 0;
        }
        return false;
    };
    do {
        std::vector<int> hv0(nv, 0);
        hv = hv0;
        do {
            bool ok = true;
            for (int e = 0; e < ne && ok; ++e) {
                std::set<int> img;
                for (int v : f.content[e]) img.insert(hv[v]);
                std::set<int> tgt(g.content[he[e]].begin(), g.content[he[e]].end());
                ok = exact_image ? img == tgt
                                 : std::includes(tgt.begin(), tgt.end(), img.begin(), img.end());
            }
            if (ok) ++total;
        } while (nv > 0 && advance(hv, mv));
    } while (ne > 0 && advance(he, me));
    return total;
}

}  // namespace

TEST_CASE("hom counts on pinned instances") {
    Hypergraph g = example_G();
    Hypergraph p1 = path(1);
    CHECK(count_hg_homs(p1, g) == 6);
    CHECK(count_ig_homs(to_incidence(p1), to_incidence(g)) == 21);
    // G is vertex-transitive over a,b,c and edges are forced: 3! maps
    CHECK(count_hg_homs(g, g) == 6);
    CHECK(count_ig_homs(to_incidence(g), to_incidence(g)) == 723);
    CHECK(count_hg_homs(p1, p1) == 2);
    CHECK(count_ig_homs(to_incidence(p1), to_incidence(p1)) == 4);
}

TEST_CASE("degenerate sources") {
    Hypergraph g = example_G();
    CHECK(count_hg_homs(path(0), g) == 1);  // the empty pair of maps
    CHECK(count_ig_homs(to_incidence(path(0)), to_incidence(g)) == 1);
    Hypergraph lone_empty = Hypergraph::make({{"f", {}}});
    CHECK(count_hg_homs(lone_empty, g) == 0);  // G has no empty edge
    CHECK(count_ig_homs(to_incidence(lone_empty), to_incidence(g)) == 4);
    CHECK(count_hg_homs(g, path(0)) == 0);
}

TEST_CASE("hom counts match the naive oracle on a sweep") {
    auto all = enumerate_hypergraphs({2, 3, false});
    for (const Hypergraph& f : all)
        for (const Hypergraph& g : all) {
            CHECK(count_hg_homs(f, g) == naive_count(f, g, true));
            CHECK(count_ig_homs(to_incidence(f), to_incidence(g)) ==
                  naive_count(f, g, false));
        }
}

TEST_CASE("all_hg_homs materialises what count_hg_homs counts") {
    Hypergraph p2 = path(2);
    Hypergraph g = example_G();
    auto homs = all_hg_homs(p2, g);
    CHECK(Count(homs.size()) == count_hg_homs(p2, g));
    for (const auto& h : homs) {
        REQUIRE(h.h_v.size() == 3);
        REQUIRE(h.h_e.size() == 2);
        for (int e = 0; e < 2; ++e) {
            std::set<int> img;
            for (int v : p2.content[e]) img.insert(h.h_v[v]);
            std::set<int> tgt(g.content[h.h_e[e]].begin(), g.content[h.h_e[e]].end());
            CHECK(img == tgt);
        }
    }
    CHECK_THROWS_AS(all_hg_homs(p2, g, 2), BudgetError);
}

TEST_CASE("labeled counts pin shared labels") {
    Hypergraph p1 = path(1);
    Hypergraph g = example_G();
    IncidenceGraph is = to_incidence(p1), it = to_incidence(g);
    KLabeledIncidenceGraph ls = make_kli(is, 1, {{1, "1"}}, {{1, "e1"}}, {{1, 1}});
    KLabeledIncidenceGraph lt = make_kli(it, 1, {{1, "a"}}, {{1, "l"}}, {{1, 1}});
    // e1 -> l and vertex 1 -> a are forced; vertex 2 ranges over l's content
    CHECK(count_labeled_homs(ls, lt) == 3);

    KLabeledIncidenceGraph ls_free = make_kli(is, 1, {}, {}, {});
    KLabeledIncidenceGraph lt_free = make_kli(it, 1, {}, {}, {});
    CHECK(count_labeled_homs(ls_free, lt_free) == 21);

    // guards never constrain the count
    KLabeledIncidenceGraph lt2 = make_kli(it, 2, {{1, "a"}}, {{1, "l"}, {2, "i"}}, {{1, 2}});
    KLabeledIncidenceGraph ls2 = make_kli(is, 2, {{1, "1"}}, {{1, "e1"}}, {{1, 1}});
    CHECK(count_labeled_homs(ls2, lt2) == 3);

    // source labels missing from the target are rejected
    KLabeledIncidenceGraph ls_b2 = make_kli(is, 2, {}, {{2, "e1"}}, {});
    KLabeledIncidenceGraph lt_b1 = make_kli(it, 2, {}, {{1, "l"}}, {});
    CHECK_THROWS_AS(count_labeled_homs(ls_b2, lt_b1), std::invalid_argument);
}

TEST_CASE("surjections onto paths") {
    CHECK(surjective_hom_exists(path(3), 3));
    CHECK(!surjective_hom_exists(path(2), 4));
    CHECK(!surjective_hom_exists(example_G(), 4));
    CHECK(!surjective_hom_exists(skew_distinguisher(1), 2));
}

TEST_CASE("truncated classes enumerate the right sources") {
    ClassTruncation shd1{TruncationKind::Shd, 1, 2, 4, false, {}};
    auto strict_sources = truncation_sources(shd1);
    CHECK(strict_sources.size() == 8);
    for (const auto& h : strict_sources) CHECK(shd_exact(to_incidence(h)).depth <= 1);

    ClassTruncation hd1{TruncationKind::Hd, 1, 2, 4, false, {}};
    auto lax_sources = truncation_sources(hd1);
    CHECK(lax_sources.size() == 18);
    for (const auto& h : lax_sources) CHECK(hd_exact(to_incidence(h)).depth <= 1);

    // hd <= shd, so the strict class is contained in the lax one
    std::set<std::string> lax_keys;
    for (const auto& h : lax_sources) lax_keys.insert(canonical_form(h));
    for (const auto& h : strict_sources) CHECK(lax_keys.count(canonical_form(h)) == 1);

    ClassTruncation expl{TruncationKind::Explicit, 0, 0, 0, false,
                         {path(1), path(2), path(1)}};
    CHECK(truncation_sources(expl).size() == 2);  // duplicates collapse

    CHECK_THROWS_AS(truncation_sources({TruncationKind::Shd, 1, 0, 4, false, {}}),
                    std::invalid_argument);
}

TEST_CASE("hom vectors are keyed by canonical forms") {
    ClassTruncation shd1{TruncationKind::Shd, 1, 2, 4, false, {}};
    Hypergraph g = example_G();
    HomVector hv = hom_vector(shd1, g);
    auto sources = truncation_sources(shd1);
    CHECK(hv.entries.size() == sources.size());
    for (const auto& s : sources) {
        auto it = hv.entries.find(canonical_form(s));
        REQUIRE(it != hv.entries.end());
        CHECK(it->second == count_hg_homs(s, g));
    }

    ClassTruncation ishd1{TruncationKind::Ishd, 1, 2, 4, false, {}};
    HomVector ihv = hom_vector(ishd1, to_incidence(g));
    CHECK(ihv.entries.size() == sources.size());
    for (const auto& s : sources) {
        auto it = ihv.entries.find(canonical_form(s));
        REQUIRE(it != ihv.entries.end());
        CHECK(it->second == count_ig_homs(to_incidence(s), to_incidence(g)));
    }

    CHECK_THROWS_AS(hom_vector(shd1, to_incidence(g)), std::invalid_argument);
    CHECK_THROWS_AS(hom_vector(ishd1, g), std::invalid_argument);
}

TEST_CASE("skewness at k = 1") {
    auto [ga, ha] = skew_pair(1);
    ClassTruncation shd36{TruncationKind::Shd, 1, 3, 6, false, {}};
    IndistVerdict strict_verdict = indistinguishable(shd36, ga, ha);
    CHECK(strict_verdict.equal);

    ClassTruncation hd36{TruncationKind::Hd, 1, 3, 6, false, {}};
    IndistVerdict lax_verdict = indistinguishable(hd36, ga, ha);
    CHECK(!lax_verdict.equal);
    CHECK(lax_verdict.count_a == 4);
    CHECK(lax_verdict.count_b == 2);
    CHECK(lax_verdict.witness_key == canonical_form(skew_distinguisher(1)));
    REQUIRE(lax_verdict.witness.has_value());
    CHECK(count_hg_homs(*lax_verdict.witness, ga) == 4);
    CHECK(count_hg_homs(*lax_verdict.witness, ha) == 2);

    IndistVerdict self = indistinguishable(hd36, ga, ga);
    CHECK(self.equal);
}
