#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xlab/constructions.hpp"
#include "xlab/embedding.hpp"
#include "xlab/extremal.hpp"
#include "xlab/family.hpp"
#include "xlab/graph.hpp"
#include "xlab/invariants.hpp"

using namespace xlab;

TEST_CASE("turan_plus_edges adds exactly the embedded edges") {
    for (int m : {1, 2}) {  // a 5-vertex part fits at most a 2-edge matching
        auto [g, p] = turan_plus_edges(10, 2, m, EmbedShape::matching, 0);
        CHECK(g.size() == turan_edge_count(10, 2) + m);
        EditDistance d = turan_edit_distance(g, 2);
        CHECK(d.alpha1 == m);
        CHECK(d.alpha2 == 0);
    }
    auto [g3, p3] = turan_plus_edges(10, 2, 3, EmbedShape::star, 0);
    CHECK(g3.size() == turan_edge_count(10, 2) + 3);
    CHECK(turan_edit_distance(g3, 2).alpha1 == 3);
    CHECK_THROWS_AS(turan_plus_edges(10, 2, 3, EmbedShape::matching, 0),
                    std::invalid_argument);
    auto [g, p] = turan_plus_edges(9, 3, 2, EmbedShape::star, 1);
    CHECK(g.size() == turan_edge_count(9, 3) + 2);
    CHECK(turan_edit_distance(g, 3).alpha1 == 2);
}

TEST_CASE("turan_plus_edges stays family-free per the gluing lemma") {
    // adding k-1 edges to T_{n,r} cannot complete k edge-disjoint copies
    GraphFamily two_triangles = parse_family("G(K3,K3)");
    for (int n = 6; n <= 10; ++n) {
        Graph g = turan_plus_edges(n, 2, 1, EmbedShape::star, 0).first;
        CHECK(is_family_free(g, two_triangles));
    }
    GraphFamily three_triangles = parse_family("G(K3,K3,K3)");
    Graph g = turan_plus_edges(10, 2, 2, EmbedShape::matching, 0).first;
    CHECK(is_family_free(g, three_triangles));
}

TEST_CASE("spex_construction shape") {
    // k = 1: plain Turan graph
    CHECK(is_isomorphic(spex_construction(9, 2, 1).first, turan(9, 2)));
    // k = 2, 3: star with k-1 edges in a smallest part
    auto [g2, p2] = spex_construction(9, 2, 2);
    CHECK(g2.size() == turan_edge_count(9, 2) + 1);
    // k = 4: triangle in a smallest part
    auto [g4, p4] = spex_construction(12, 2, 4);
    CHECK(g4.size() == turan_edge_count(12, 2) + 3);
    CHECK(contains_subgraph(g4, standard_graph(StandardKind::complete, 3)).status ==
          SearchStatus::present);
    // partition sizes are nonincreasing and sum to n
    int total = 0;
    for (std::size_t i = 0; i < p4.sizes.size(); ++i) {
        total += p4.sizes[i];
        if (i > 0) CHECK(p4.sizes[i - 1] >= p4.sizes[i]);
    }
    CHECK(total == 12);
}

TEST_CASE("turan_plus_matching and cone") {
    Graph tm = turan_plus_matching(10, 2);
    CHECK(tm.size() == turan_edge_count(10, 2) + 2);
    Graph cone = cone_over_turan(10, 2);
    CHECK(cone.order() == 10);
    CHECK(cone.size() == turan_edge_count(9, 2) + 9);
}

TEST_CASE("counterexample family member counts for s = 3") {
    GraphFamily fam = counterexample_family(3);
    REQUIRE(fam.members().size() == 3);
    std::vector<int> sizes;
    std::vector<int> chis;
    for (const Graph& m : fam.members()) {
        sizes.push_back(m.size());
        chis.push_back(chromatic_number(m));
    }
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{38, 41, 42});
    // the member with a star in each side needs four colors; the family's
    // chromatic number is still three
    std::sort(chis.begin(), chis.end());
    CHECK(chis == std::vector<int>{3, 3, 4});
    CHECK(fam.chi() == 3);
}

TEST_CASE("counterexample witness edge count and structure") {
    Graph w = counterexample_witness(16, 3);
    CHECK(w.order() == 16);
    CHECK(w.size() == turan_edge_count(16, 2) + 7);  // 64 - 1 + 8
    EditDistance d = turan_edit_distance(w, 2);
    CHECK(d.alpha2 >= 1);
    CHECK_THROWS_AS(counterexample_witness(15, 3), std::invalid_argument);
    CHECK_THROWS_AS(counterexample_witness(12, 3), std::invalid_argument);
    CHECK_THROWS_AS(counterexample_witness(20, 2), std::invalid_argument);
}

TEST_CASE("witness avoids the forbidden family") {
    Graph w = counterexample_witness(16, 3);
    GraphFamily fam = counterexample_family(3);
    CHECK(family_free_status(w, fam, 1000000000ull) == SearchStatus::absent);
}
