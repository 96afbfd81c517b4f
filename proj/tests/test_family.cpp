#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "xlab/family.hpp"
#include "xlab/graph.hpp"
#include "xlab/invariants.hpp"

using namespace xlab;

TEST_CASE("builtin names") {
    CHECK(parse_graph_expr("K4") == canonical_form(standard_graph(StandardKind::complete, 4)));
    CHECK(is_isomorphic(parse_graph_expr("C5"), standard_graph(StandardKind::cycle, 5)));
    CHECK(is_isomorphic(parse_graph_expr("P4"), standard_graph(StandardKind::path, 4)));
    CHECK(is_isomorphic(parse_graph_expr("S4"), standard_graph(StandardKind::star, 4)));
    CHECK(is_isomorphic(parse_graph_expr("M4"), standard_graph(StandardKind::matching, 4)));
    CHECK(is_isomorphic(parse_graph_expr("W5"), standard_graph(StandardKind::wheel, 5)));
    CHECK(parse_graph_expr("E3").size() == 0);
    CHECK(is_isomorphic(parse_graph_expr("T(7,2)"), turan(7, 2)));
}

TEST_CASE("join and union combinators") {
    Graph w6 = parse_graph_expr("K1+C5");
    CHECK(is_isomorphic(w6, standard_graph(StandardKind::wheel, 6)));
    Graph two_k3 = parse_graph_expr("K3uK3");
    CHECK(two_k3.order() == 6);
    CHECK(two_k3.size() == 6);
    // operators chain left to right: K1+C5uK1 is (K1+C5) u K1
    Graph g = parse_graph_expr("K1+C5uK1");
    CHECK(g.order() == 7);
}

TEST_CASE("graph6 literals") {
    CHECK(parse_graph_expr("g6:Bw") == canonical_form(standard_graph(StandardKind::complete, 3)));
    GraphFamily fam = parse_family("g6:A_,K3");
    CHECK(fam.members().size() == 2);
}

TEST_CASE("family dedup and cached invariants") {
    GraphFamily fam = parse_family("K3,g6:Bw,C5");
    CHECK(fam.members().size() == 2);  // K3 appears twice
    CHECK(fam.chi() == 3);             // min over members
    CHECK(fam.phi() == 5);
    CHECK(fam.max_edges() == 5);
    CHECK_THROWS_AS(parse_family(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("K3,,C5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("Q7"), std::invalid_argument);
}

TEST_CASE("edge-disjoint union family of two triangles") {
    Graph k3 = standard_graph(StandardKind::complete, 3);
    std::vector<Graph> fam = edge_disjoint_union_family({k3, k3});
    REQUIRE(fam.size() == 2);
    Graph bowtie = Graph::with_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    Graph two = disjoint_union(k3, k3);
    auto found = [&](const Graph& g) {
        return std::any_of(fam.begin(), fam.end(),
                           [&](const Graph& m) { return is_isomorphic(m, g); });
    };
    CHECK(found(bowtie));
    CHECK(found(two));
}

TEST_CASE("G() expansion inside the mini-language") {
    GraphFamily fam = parse_family("G(K3,K3)");
    CHECK(fam.members().size() == 2);
    CHECK(fam.chi() == 3);
    CHECK(fam.phi() == 6);

    // triangle plus an edge: members on up to 5 vertices
    GraphFamily mixed = parse_family("G(K3,K2)");
    for (const Graph& m : mixed.members()) {
        CHECK(m.size() == 4);
        CHECK(m.order() <= 5);
    }
}

TEST_CASE("every family member has no isolated vertices after G expansion") {
    GraphFamily fam = parse_family("G(K3,K3)");
    for (const Graph& m : fam.members())
        for (int v = 0; v < m.order(); ++v) CHECK(m.degree(v) > 0);
}
