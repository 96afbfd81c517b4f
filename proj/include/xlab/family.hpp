#ifndef XLAB_FAMILY_HPP
#define XLAB_FAMILY_HPP

#include <string>
#include <vector>

#include "xlab/graph.hpp"

namespace xlab {

/// Finite list of forbidden graphs with cached chi and phi.
/// Members are stored in canonical form, deduplicated up to isomorphism.
class GraphFamily {
public:
    static GraphFamily from_members(std::string name, std::vector<Graph> members);

    const std::string& name() const { return name_; }
    const std::vector<Graph>& members() const { return members_; }
    int chi() const { return chi_; }    // min member chromatic number
    int phi() const { return phi_; }    // max member order
    int max_edges() const { return max_edges_; }

private:
    std::string name_;
    std::vector<Graph> members_;
    int chi_ = 0;
    int phi_ = 0;
    int max_edges_ = 0;
};

/// All graphs (up to isomorphism, no isolated vertices) whose edge set is
/// the union of pairwise edge-disjoint embedded copies of the patterns.
std::vector<Graph> edge_disjoint_union_family(const std::vector<Graph>& patterns);

/// Family mini-language: comma-separated members; builtin names K3, C5, P4,
/// S4, M4, E3, W5; T(n,r); join '+' and disjoint union 'u'; G(F1,...,Fk)
/// expanding to the edge-disjoint union family; g6:<string> literals.
GraphFamily parse_family(const std::string& spec);

/// Single graph expression (same grammar, one member).
Graph parse_graph_expr(const std::string& spec);

}  // namespace xlab

#endif
