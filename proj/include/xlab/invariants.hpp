#ifndef XLAB_INVARIANTS_HPP
#define XLAB_INVARIANTS_HPP

#include <optional>

#include "xlab/graph.hpp"

namespace xlab {

struct InvariantBundle {
    int chi;
    int nu;
    int delta_max;
    int edge_count;
};

/// Exact chromatic number; branch and bound with a greedy-clique lower
/// bound. Budgeted at n <= 16.
int chromatic_number(const Graph& g);

/// True iff deleting some single edge lowers the chromatic number.
/// The witness edge, when present, satisfies chi(g - e) = chi(g) - 1.
std::optional<Edge> color_critical_edge(const Graph& g);
bool is_color_critical(const Graph& g);

/// Matching number by augmenting paths with blossom contraction.
int matching_number(const Graph& g);

int max_degree(const Graph& g);

/// max{e(G) : nu(G) <= nu, Delta(G) <= delta}.
int chvatal_hanson(int nu, int delta);

/// e(T_{n,r}) computed combinatorially, no graph built.
long long turan_edge_count(int n, int r);

InvariantBundle invariant_bundle(const Graph& g);

}  // namespace xlab

#endif
