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
#include "hgx/io.hpp"

using namespace hgx;

namespace {

std::vector<std::string> content_names(const Hypergraph& h, const std::string& edge) {
    std::vector<std::string> out;
    for (int v : h.content[*h.edge_index(edge)]) out.push_back(h.vertex_names[v]);
    return out;
}

int singleton_edges(const Hypergraph& h) {
    int n = 0;
    for (const auto& c : h.content) n += c.size() == 1;
    return n;
}

}  // namespace

TEST_CASE("the two running examples") {
    Hypergraph g = example_G();
    CHECK(g.vertex_names == std::vector<std::string>{"a", "b", "c"});
    CHECK(g.edge_names == std::vector<std::string>{"i", "j", "k", "l"});
    CHECK(content_names(g, "i") == std::vector<std::string>{"a", "b"});
    CHECK(content_names(g, "j") == std::vector<std::string>{"b", "c"});
    CHECK(content_names(g, "k") == std::vector<std::string>{"a", "c"});
    CHECK(content_names(g, "l") == std::vector<std::string>{"a", "b", "c"});

    Hypergraph h = example_H();
    CHECK(h.n_vertices() == 7);
    CHECK(h.edge_names == std::vector<std::string>{"e", "f", "g", "h"});
    CHECK(content_names(h, "e") == std::vector<std::string>{"u", "v", "x"});
    CHECK(content_names(h, "f") == std::vector<std::string>{"v", "w", "z"});
    CHECK(content_names(h, "g") == std::vector<std::string>{"u", "w", "y"});
    CHECK(content_names(h, "h") == std::vector<std::string>{"t", "x", "y", "z"});

    // the four edges pairwise intersect in six distinct vertices; t is private
    std::set<std::string> meets;
    for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y) {
            std::vector<int> common;
            std::set_intersection(h.content[x].begin(), h.content[x].end(),
                                  h.content[y].begin(), h.content[y].end(),
                                  std::back_inserter(common));
            REQUIRE(common.size() == 1);
            meets.insert(h.vertex_names[common[0]]);
        }
    CHECK(meets.size() == 6);
    CHECK(meets.count("t") == 0);
}

TEST_CASE("first skewness pair") {
    auto [g1, h1] = skew_pair(1);
    for (const Hypergraph* s : {&g1, &h1}) {
        CHECK(s->n_edges() == 6);
        CHECK(s->n_vertices() == 4);
        CHECK(singleton_edges(*s) == 2);
    }
    CHECK(!isomorphic(to_incidence(g1), to_incidence(h1)));

    // the two marked vertices are cycle-adjacent in one side only
    auto marked_adjacent = [](const Hypergraph& s) {
        std::vector<int> marks;
        for (const auto& c : s.content)
            if (c.size() == 1) marks.push_back(c[0]);
        for (const auto& c : s.content)
            if (c.size() == 2 && std::count(c.begin(), c.end(), marks[0]) &&
                std::count(c.begin(), c.end(), marks[1]))
                return true;
        return false;
    };
    CHECK(marked_adjacent(g1));
    CHECK(!marked_adjacent(h1));

    auto [g2, h2] = skew_pair(2);
    CHECK(g2.n_edges() == 12);  // a 10-edge cycle plus two singletons
    CHECK(g2.n_vertices() == 10);
    CHECK(h2.n_edges() == 12);
    CHECK(singleton_edges(g2) == 2);
    CHECK(!isomorphic(to_incidence(g2), to_incidence(h2)));

    CHECK_THROWS_AS(skew_pair(0), std::invalid_argument);
}

TEST_CASE("first skewness distinguisher") {
    Hypergraph d1 = skew_distinguisher(1);
    CHECK(d1.n_edges() == 3);
    CHECK(d1.n_vertices() == 2);
    CHECK(singleton_edges(d1) == 2);
    CHECK(hd_exact(to_incidence(d1)).depth == 1);
    auto [g1, h1] = skew_pair(1);
    CHECK(count_hg_homs(d1, g1) == 4);
    CHECK(count_hg_homs(d1, h1) == 2);

    Hypergraph d2 = skew_distinguisher(2);
    CHECK(d2.n_edges() == 6);  // the 4-edge path plus two singletons
    CHECK(d2.n_vertices() == 5);
    CHECK(hd_exact(to_incidence(d2)).depth == 2);
    auto [g2, h2] = skew_pair(2);
    CHECK(count_hg_homs(d2, g2) == 28);
    CHECK(count_hg_homs(d2, h2) == 26);
}

TEST_CASE("second skewness pair and its incidence distinguisher") {
    auto [gp, hp] = skew_pair_prime(1);
    CHECK(gp.n_edges() == 6);  // 4-cycle plus two pendant handles
    CHECK(gp.n_vertices() == 6);
    CHECK(hp.n_edges() == 6);
    CHECK(!isomorphic(to_incidence(gp), to_incidence(hp)));
    auto degree_one = [](const Hypergraph& s) {
        std::vector<int> deg(s.n_vertices(), 0);
        for (const auto& c : s.content)
            for (int v : c) ++deg[v];
        return static_cast<int>(std::count(deg.begin(), deg.end(), 1));
    };
    CHECK(degree_one(gp) == 2);
    CHECK(degree_one(hp) == 2);

    auto [gp2, hp2] = skew_pair_prime(2);
    CHECK(gp2.n_edges() == 20);  // 18-edge cycle plus two handles
    CHECK(gp2.n_vertices() == 20);
    CHECK(hp2.n_edges() == 20);

    // the index the construction names is degenerate at k = 1: both
    // singletons land on the same path vertex and the counts tie
    IncidenceGraph tie = skew_prime_distinguisher(1);
    CHECK(count_ig_homs(tie, to_incidence(gp)) == 144);
    CHECK(count_ig_homs(tie, to_incidence(hp)) == 144);

    IncidenceGraph d = skew_prime_distinguisher(1, 2);
    CHECK(d.n_blues() == 3);
    CHECK(hd_exact(d).depth == 1);
    CHECK(count_ig_homs(d, to_incidence(gp)) == 134);
    CHECK(count_ig_homs(d, to_incidence(hp)) == 132);
}

TEST_CASE("enumeration counts and determinism") {
    CHECK(enumerate_hypergraphs({1, 3, false}).size() == 3);
    CHECK(enumerate_hypergraphs({2, 2, false}).size() == 6);
    CHECK(enumerate_hypergraphs({2, 3, false}).size() == 12);
    CHECK(enumerate_hypergraphs({2, 4, false}).size() == 21);
    CHECK(enumerate_hypergraphs({3, 5, false}).size() == 189);
    CHECK(enumerate_hypergraphs({3, 6, false}).size() == 385);

    auto a = enumerate_hypergraphs({2, 4, false});
    auto b = enumerate_hypergraphs({2, 4, false});
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(write_hg(a[i]) == write_hg(b[i]));

    std::set<std::string> keys;
    for (const auto& h : enumerate_hypergraphs({3, 5, false}))
        CHECK(keys.insert(canonical_form(h)).second);  // pairwise non-isomorphic

    auto conn = enumerate_hypergraphs({2, 4, true});
    CHECK(conn.size() == 17);
    std::set<std::string> all24;
    for (const auto& h : a) all24.insert(canonical_form(h));
    for (const auto& h : conn) {
        CHECK(is_connected(to_incidence(h)));
        CHECK(all24.count(canonical_form(h)) == 1);
    }

    CHECK_THROWS_AS(enumerate_hypergraphs({5, 4, false}), BudgetError);
    CHECK_THROWS_AS(enumerate_hypergraphs({4, 8, false}), BudgetError);
}
