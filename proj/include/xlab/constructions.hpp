#ifndef XLAB_CONSTRUCTIONS_HPP
#define XLAB_CONSTRUCTIONS_HPP

#include <utility>
#include <vector>

#include "xlab/family.hpp"
#include "xlab/graph.hpp"

namespace xlab {

/// Assignment of vertices to classes 0..r-1; class sizes nonincreasing.
struct Partition {
    std::vector<int> cls;    // vertex -> class
    std::vector<int> sizes;  // class sizes, nonincreasing
};

enum class EmbedShape { star, triangle, matching, explicit_edges };

/// T_{n,r} with a k-1 edge subgraph embedded in one partite set, placed on
/// the lowest-indexed vertices of that part.
std::pair<Graph, Partition> turan_plus_edges(int n, int r, int k_minus_1,
                                             EmbedShape shape, int target_part,
                                             const EdgeList* explicit_edges = nullptr);

/// The spectral extremal candidate: T_{n,r} plus a triangle (k = 4) or a
/// star with k-1 edges (otherwise) in a smallest part. force_star overrides
/// the k = 4 triangle for comparative experiments; that variant is not
/// extremal.
std::pair<Graph, Partition> spex_construction(int n, int r, int k,
                                              bool force_star = false);

/// T'_{n,r}: maximum matching embedded into a largest partite set.
Graph turan_plus_matching(int n, int r);

/// K_1 + T_{n-1,r}.
Graph cone_over_turan(int n, int r);

/// The three K_{2s,2s}-based forbidden graphs: two isolated edges in one
/// side; K_{1,s+2} in one side; K_{1,s} in each side.
GraphFamily counterexample_family(int s);

/// T_{n,2} minus one cross edge uv, plus a star on s+1 vertices centered at
/// u in u's part and another centered at v in v's part.
Graph counterexample_witness(int n, int s);

}  // namespace xlab

#endif
