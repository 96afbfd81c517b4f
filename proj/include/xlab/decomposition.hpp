#ifndef XLAB_DECOMPOSITION_HPP
#define XLAB_DECOMPOSITION_HPP

#include <optional>
#include <vector>

#include "xlab/family.hpp"
#include "xlab/graph.hpp"

namespace xlab {

struct DecompositionReport {
    int r = 0;                     // chi(H) = r + 1
    int phi = 0;
    std::vector<Graph> family_m;   // canonical minimal members, sorted
    std::optional<int> nu_star;    // least nu with M_{2 nu} in the family
    std::optional<int> delta_star; // least Delta with S_{Delta+1} in the family
    bool condition_ii = false;
};

/// The host graph (M u E_phi) + T_{(r-1)phi, r-1}.
Graph decomposition_host(const Graph& m, int r, int phi);

/// Enumerates candidate M's up to isomorphism (no isolated vertices,
/// |V| <= phi, e <= max member edge count), keeps those for which some
/// family member embeds in the host, filters to subgraph-minimal elements,
/// and scans the result for matchings and stars.
DecompositionReport decomposition_family(const GraphFamily& fam);

}  // namespace xlab

#endif
