#include "xlab/decomposition.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "xlab/embedding.hpp"
#include "xlab/enumerate.hpp"
#include "xlab/invariants.hpp"

namespace xlab {

Graph decomposition_host(const Graph& m, int r, int phi) {
    Graph left = disjoint_union(m, Graph::empty(phi));
    return join(left, turan((r - 1) * phi, r - 1));
}

namespace {

bool qualifies(const Graph& m, const GraphFamily& fam, int r, int phi) {
    if (m.size() == 0) return false;  // host stays complete r-partite
    Graph host = decomposition_host(m, r, phi);
    for (const Graph& h : fam.members()) {
        if (h.order() > host.order()) continue;
        if (contains_subgraph(host, h).status == SearchStatus::present)
            return true;
    }
    return false;
}

}  // namespace

DecompositionReport decomposition_family(const GraphFamily& fam) {
    if (fam.chi() <= 2)
        throw std::invalid_argument(
            "decomposition_family: needs chi(H) = r+1 >= 3");
    int r = fam.chi() - 1;
    int phi = fam.phi();
    if (phi > 8)
        throw std::invalid_argument("decomposition_family: phi over budget");

    // Candidate M's: isolated-vertex-free graphs with <= phi vertices and at
    // most max_H e(H) edges, up to isomorphism.
    std::unordered_set<Graph, GraphHash> candidates;
    enumerate_classes(
        phi, [&](const Graph& g) { return g.size() <= fam.max_edges(); },
        [&](const Graph& g) {
            if (g.size() > 0) candidates.insert(canonical_form(g.without_isolated()));
        });

    std::vector<Graph> satisfying;
    for (const Graph& m : candidates)
        if (qualifies(m, fam, r, phi)) satisfying.push_back(m);

    // Minimal under the subgraph order: no single-edge-deleted subgraph
    // (isolated vertices stripped) may still qualify.
    std::vector<Graph> minimal;
    for (const Graph& m : satisfying) {
        bool is_minimal = true;
        for (auto [u, v] : m.edges()) {
            Graph sub = m.without_edge(u, v).without_isolated();
            if (qualifies(sub, fam, r, phi)) {
                is_minimal = false;
                break;
            }
        }
        if (is_minimal) minimal.push_back(m);
    }
    std::sort(minimal.begin(), minimal.end());

    DecompositionReport report;
    report.r = r;
    report.phi = phi;
    report.family_m = std::move(minimal);

    for (int nu = 1; nu <= phi / 2; ++nu) {
        Graph matching = canonical_form(standard_graph(StandardKind::matching, 2 * nu));
        if (std::find(report.family_m.begin(), report.family_m.end(), matching) !=
            report.family_m.end()) {
            report.nu_star = nu;
            break;
        }
    }
    for (int delta = 1; delta <= phi; ++delta) {
        Graph star = canonical_form(standard_graph(StandardKind::star, delta + 1));
        if (std::find(report.family_m.begin(), report.family_m.end(), star) !=
            report.family_m.end()) {
            report.delta_star = delta;
            break;
        }
    }
    report.condition_ii = report.nu_star.has_value() && report.delta_star.has_value();
    return report;
}

}  // namespace xlab
