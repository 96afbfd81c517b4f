#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xlab/decomposition.hpp"
#include "xlab/embedding.hpp"
#include "xlab/family.hpp"
#include "xlab/graph.hpp"

using namespace xlab;

TEST_CASE("host graph shape") {
    Graph m = standard_graph(StandardKind::complete, 2);
    // (K_2 u E_3) + T_{3,1} with r = 2, phi = 3: 5 + 3 vertices
    Graph host = decomposition_host(m, 2, 3);
    CHECK(host.order() == 8);
    // cross edges 5*3 = 15, inside: 1 (the K_2 edge), T_{3,1} has none
    CHECK(host.size() == 16);
}

TEST_CASE("decomposition family of a single triangle is the single edge") {
    DecompositionReport rep = decomposition_family(parse_family("K3"));
    CHECK(rep.r == 2);
    CHECK(rep.phi == 3);
    REQUIRE(rep.family_m.size() == 1);
    CHECK(is_isomorphic(rep.family_m[0], standard_graph(StandardKind::complete, 2)));
    CHECK(rep.nu_star == 1);
    CHECK(rep.delta_star == 1);
    CHECK(rep.condition_ii);
}

TEST_CASE("decomposition family of C5 is the single edge") {
    DecompositionReport rep = decomposition_family(parse_family("C5"));
    CHECK(rep.r == 2);
    REQUIRE(rep.family_m.size() == 1);
    CHECK(is_isomorphic(rep.family_m[0], standard_graph(StandardKind::complete, 2)));
    CHECK(rep.nu_star == 1);
    CHECK(rep.delta_star == 1);
    CHECK(rep.condition_ii);
}

TEST_CASE("decomposition family of two edge-disjoint triangles") {
    DecompositionReport rep = decomposition_family(parse_family("G(K3,K3)"));
    CHECK(rep.r == 2);
    CHECK(rep.phi == 6);
    REQUIRE(rep.family_m.size() == 2);
    bool has_p3 = false, has_m4 = false;
    for (const Graph& m : rep.family_m) {
        if (is_isomorphic(m, standard_graph(StandardKind::path, 3))) has_p3 = true;
        if (is_isomorphic(m, standard_graph(StandardKind::matching, 4))) has_m4 = true;
    }
    CHECK(has_p3);
    CHECK(has_m4);
    CHECK(rep.nu_star == 2);
    CHECK(rep.delta_star == 2);
    CHECK(rep.condition_ii);
}

TEST_CASE("members are certified: qualification witness and minimality") {
    GraphFamily fam = parse_family("G(K3,K3)");
    DecompositionReport rep = decomposition_family(fam);
    for (const Graph& m : rep.family_m) {
        Graph host = decomposition_host(m, rep.r, rep.phi);
        bool embeds = false;
        for (const Graph& h : fam.members())
            if (h.order() <= host.order() &&
                contains_subgraph(host, h).status == SearchStatus::present)
                embeds = true;
        CHECK(embeds);
        // strict minimality: removing any edge kills qualification
        for (auto [u, v] : m.edges()) {
            Graph sub = m.without_edge(u, v).without_isolated();
            bool still = false;
            if (sub.size() > 0) {
                Graph h2 = decomposition_host(sub, rep.r, rep.phi);
                for (const Graph& h : fam.members())
                    if (h.order() <= h2.order() &&
                        contains_subgraph(h2, h).status == SearchStatus::present)
                        still = true;
            }
            CHECK_FALSE(still);
        }
    }
}

TEST_CASE("bipartite families are rejected") {
    CHECK_THROWS_AS(decomposition_family(parse_family("K2")), std::invalid_argument);
    CHECK_THROWS_AS(decomposition_family(parse_family("C4")), std::invalid_argument);
}
