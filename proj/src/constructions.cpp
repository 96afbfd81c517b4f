#include "xlab/constructions.hpp"

#include <stdexcept>

#include "xlab/invariants.hpp"

namespace xlab {

namespace {

std::vector<int> balanced_parts(int n, int r) {
    std::vector<int> parts(static_cast<std::size_t>(r), n / r);
    for (int i = 0; i < n % r; ++i) ++parts[static_cast<std::size_t>(i)];
    return parts;
}

Partition turan_partition(int n, int r) {
    Partition p;
    p.sizes = balanced_parts(n, r);
    p.cls.assign(static_cast<std::size_t>(n), 0);
    int v = 0;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < p.sizes[static_cast<std::size_t>(i)]; ++j)
            p.cls[static_cast<std::size_t>(v++)] = i;
    return p;
}

int part_start(const Partition& p, int part) {
    int start = 0;
    for (int i = 0; i < part; ++i) start += p.sizes[static_cast<std::size_t>(i)];
    return start;
}

}  // namespace

std::pair<Graph, Partition> turan_plus_edges(int n, int r, int k_minus_1,
                                             EmbedShape shape, int target_part,
                                             const EdgeList* explicit_edges) {
    if (target_part < 0 || target_part >= r)
        throw std::invalid_argument("turan_plus_edges: bad target part");
    Partition p = turan_partition(n, r);
    int start = part_start(p, target_part);
    int psize = p.sizes[static_cast<std::size_t>(target_part)];
    Graph g = turan(n, r);

    EdgeList local;  // part-local indices
    switch (shape) {
        case EmbedShape::star:
            if (psize < k_minus_1 + 1)
                throw std::invalid_argument("turan_plus_edges: star does not fit part");
            for (int i = 1; i <= k_minus_1; ++i) local.emplace_back(0, i);
            break;
        case EmbedShape::triangle:
            if (k_minus_1 != 3)
                throw std::invalid_argument("turan_plus_edges: triangle needs exactly 3 edges");
            if (psize < 3)
                throw std::invalid_argument("turan_plus_edges: triangle does not fit part");
            local = {{0, 1}, {0, 2}, {1, 2}};
            break;
        case EmbedShape::matching:
            if (psize < 2 * k_minus_1)
                throw std::invalid_argument("turan_plus_edges: matching does not fit part");
            for (int i = 0; i < k_minus_1; ++i)
                local.emplace_back(2 * i, 2 * i + 1);
            break;
        case EmbedShape::explicit_edges:
            if (!explicit_edges)
                throw std::invalid_argument("turan_plus_edges: missing edge list");
            if (static_cast<int>(explicit_edges->size()) != k_minus_1)
                throw std::invalid_argument("turan_plus_edges: edge count mismatch");
            local = *explicit_edges;
            break;
    }
    for (auto [u, v] : local) {
        if (u < 0 || v < 0 || u >= psize || v >= psize)
            throw std::invalid_argument("turan_plus_edges: edge outside part");
        g = g.with_edge(start + u, start + v);
    }
    return {std::move(g), std::move(p)};
}

std::pair<Graph, Partition> spex_construction(int n, int r, int k, bool force_star) {
    if (k < 1) throw std::invalid_argument("spex_construction: k < 1");
    if (k == 1) return {turan(n, r), turan_partition(n, r)};
    // Smallest part: sizes are nonincreasing, so the last one. When n is a
    // multiple of r every part qualifies and the first is equivalent; the
    // last is used uniformly.
    int target = r - 1;
    if (k == 4 && !force_star)
        return turan_plus_edges(n, r, 3, EmbedShape::triangle, target);
    return turan_plus_edges(n, r, k - 1, EmbedShape::star, target);
}

Graph turan_plus_matching(int n, int r) {
    if (r < 1 || r > n) throw std::invalid_argument("turan_plus_matching: bad r");
    // Largest part (size ceil(n/r)) is part 0.
    Partition p = turan_partition(n, r);
    int m = p.sizes[0] / 2;
    Graph g = turan(n, r);
    for (int i = 0; i < m; ++i) g = g.with_edge(2 * i, 2 * i + 1);
    return g;
}

Graph cone_over_turan(int n, int r) {
    if (n < r + 1) throw std::invalid_argument("cone_over_turan: n < r + 1");
    return join(standard_graph(StandardKind::complete, 1), turan(n - 1, r));
}

GraphFamily counterexample_family(int s) {
    if (s < 3) throw std::invalid_argument("counterexample_family: s < 3");
    Graph base = complete_multipartite({2 * s, 2 * s});
    // Side A is vertices 0..2s-1, side B is 2s..4s-1.
    Graph h1 = base.with_edge(0, 1).with_edge(2, 3);
    Graph h2 = base;
    for (int i = 1; i <= s + 2; ++i) h2 = h2.with_edge(0, i);
    Graph h3 = base;
    for (int i = 1; i <= s; ++i) h3 = h3.with_edge(0, i);
    for (int i = 1; i <= s; ++i) h3 = h3.with_edge(2 * s, 2 * s + i);
    return GraphFamily::from_members("counterexample(s=" + std::to_string(s) + ")",
                                     {h1, h2, h3});
}

Graph counterexample_witness(int n, int s) {
    if (s < 3) throw std::invalid_argument("counterexample_witness: s < 3");
    if (n % 2 != 0 || n < 4 * s + 4)
        throw std::invalid_argument("counterexample_witness: n must be even and >= 4s+4");
    int half = n / 2;
    Graph g = turan(n, 2);
    int u = 0, v = half;
    g = g.without_edge(u, v);
    // A star with s+1 edges centered at each endpoint of the removed edge,
    // leaves on the lowest-indexed non-center vertices of the part.
    for (int i = 1; i <= s + 1; ++i) g = g.with_edge(u, u + i);
    for (int i = 1; i <= s + 1; ++i) g = g.with_edge(v, v + i);
    return g;
}

}  // namespace xlab
