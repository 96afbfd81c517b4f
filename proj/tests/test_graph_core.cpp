#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "xlab/graph.hpp"

using namespace xlab;

TEST_CASE("edge editing and basic accessors") {
    Graph g = Graph::with_edges(4, {{0, 1}, {1, 2}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(3) == 0);

    Graph h = g.with_edge(0, 2);
    CHECK(g.size() == 2);  // immutable
    CHECK(h.size() == 3);
    CHECK(h.without_edge(0, 2) == g);
    CHECK_THROWS_AS(g.with_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.with_edge(0, 4), std::invalid_argument);
}

TEST_CASE("standard graphs have the right sizes") {
    CHECK(standard_graph(StandardKind::complete, 5).size() == 10);
    CHECK(standard_graph(StandardKind::empty, 5).size() == 0);
    CHECK(standard_graph(StandardKind::cycle, 5).size() == 5);
    CHECK(standard_graph(StandardKind::path, 5).size() == 4);
    CHECK(standard_graph(StandardKind::star, 5).size() == 4);
    CHECK(standard_graph(StandardKind::matching, 6).size() == 3);
    CHECK(standard_graph(StandardKind::wheel, 6).size() == 10);
    // star centers vertex 0
    Graph s = standard_graph(StandardKind::star, 4);
    CHECK(s.degree(0) == 3);
}

TEST_CASE("turan graph edge counts and balance") {
    CHECK(turan(8, 2).size() == 16);
    CHECK(turan(7, 2).size() == 12);
    CHECK(turan(10, 3).size() == 33);
    CHECK(turan(6, 6) == standard_graph(StandardKind::complete, 6));
}

TEST_CASE("join adds all cross edges") {
    Graph k1 = standard_graph(StandardKind::complete, 1);
    Graph c5 = standard_graph(StandardKind::cycle, 5);
    Graph w = join(k1, c5);
    CHECK(w.order() == 6);
    CHECK(w.size() == 10);
    CHECK(is_isomorphic(w, standard_graph(StandardKind::wheel, 6)));
}

TEST_CASE("components and connectivity") {
    Graph g = disjoint_union(standard_graph(StandardKind::complete, 3),
                             standard_graph(StandardKind::path, 2));
    CHECK_FALSE(is_connected(g));
    CHECK(components(g).size() == 2);
    CHECK(is_connected(standard_graph(StandardKind::cycle, 7)));
    // isolated vertices are their own components
    CHECK(components(Graph::empty(3)).size() == 3);
}

TEST_CASE("induced subgraph and isolated stripping") {
    Graph g = standard_graph(StandardKind::cycle, 5);
    Graph p = g.induced(0b00111);  // vertices 0,1,2 of the cycle
    CHECK(p.order() == 3);
    CHECK(p.size() == 2);
    Graph with_iso = disjoint_union(standard_graph(StandardKind::complete, 3),
                                    Graph::empty(2));
    CHECK(with_iso.without_isolated().order() == 3);
}

TEST_CASE("canonical form collides exactly for isomorphic graphs") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(0, 1);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = Graph::empty(n);
        double p = unif(rng);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (unif(rng) < p) g = g.with_edge(u, v);
        // random relabeling
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = g.permuted(perm);
        CHECK(canonical_form(g) == canonical_form(h));
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs of equal degree sequence") {
    // C_6 vs two triangles: both 2-regular on 6 vertices
    Graph c6 = standard_graph(StandardKind::cycle, 6);
    Graph tt = disjoint_union(standard_graph(StandardKind::complete, 3),
                              standard_graph(StandardKind::complete, 3));
    CHECK(canonical_form(c6) != canonical_form(tt));
    CHECK_FALSE(is_isomorphic(c6, tt));
}

TEST_CASE("canonical form is fast on highly symmetric graphs") {
    // these would blow up a naive individualization search
    canonical_form(standard_graph(StandardKind::complete, 40));
    canonical_form(Graph::empty(40));
    canonical_form(turan(40, 2));
    canonical_form(turan(39, 3));
    CHECK(true);
}

TEST_CASE("graph6 known encodings") {
    CHECK(to_graph6(standard_graph(StandardKind::complete, 2)) == "A_");
    CHECK(to_graph6(standard_graph(StandardKind::complete, 3)) == "Bw");
    CHECK(parse_graph6("A_") == standard_graph(StandardKind::complete, 2));
    CHECK(parse_graph6("Bw") == standard_graph(StandardKind::complete, 3));
    CHECK(parse_graph6("A?") == Graph::empty(2));
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unif(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 20);
        Graph g = Graph::empty(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (unif(rng) < 0.4) g = g.with_edge(u, v);
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("A"), std::invalid_argument);   // truncated
    CHECK_THROWS_AS(parse_graph6("A_x"), std::invalid_argument); // trailing data
    CHECK_THROWS_AS(parse_graph6("\x01\x02"), std::invalid_argument);
}

TEST_CASE("encode orders graphs consistently with operator<") {
    Graph a = Graph::with_edges(3, {{0, 1}});
    Graph b = Graph::with_edges(3, {{0, 1}, {1, 2}});
    CHECK((a < b || b < a));
    CHECK_FALSE(a < a);
}
