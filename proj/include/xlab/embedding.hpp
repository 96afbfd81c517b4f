#ifndef XLAB_EMBEDDING_HPP
#define XLAB_EMBEDDING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "xlab/graph.hpp"

namespace xlab {

/// Outcome of a budgeted search: a witness, a certified absence, or an
/// exhausted step budget (never conflated with absence).
enum class SearchStatus { present, absent, exhausted };

struct Embedding {
    std::vector<int> map;  // pattern vertex -> host vertex
};

struct EmbedResult {
    SearchStatus status;
    std::optional<Embedding> embedding;
    unsigned long long steps = 0;
};

struct PackingWitness {
    std::vector<Embedding> copies;
    std::vector<EdgeList> copy_edges;  // image edges per copy, pairwise disjoint
};

struct PackingResult {
    SearchStatus status;
    std::optional<PackingWitness> witness;
    unsigned long long steps = 0;
};

inline constexpr unsigned long long default_step_budget = 1ull << 40;

/// Not-necessarily-induced subgraph containment. Backtracking ordered by
/// descending pattern degree with neighborhood-bitmask pruning. Host edges
/// listed in `forbidden` may not be used by the embedding.
EmbedResult contains_subgraph(const Graph& host, const Graph& pattern,
                              unsigned long long budget = default_step_budget,
                              const std::vector<std::uint64_t>* forbidden = nullptr);

class GraphFamily;  // family.hpp

SearchStatus family_free_status(const Graph& host, const GraphFamily& fam,
                                unsigned long long budget = default_step_budget);
/// Throws if the budget runs out before a certified answer.
bool is_family_free(const Graph& host, const GraphFamily& fam,
                    unsigned long long budget = default_step_budget);

PackingResult find_edge_disjoint(const Graph& host,
                                 const std::vector<Graph>& patterns,
                                 unsigned long long budget = default_step_budget);

int max_edge_disjoint_copies(const Graph& host, const Graph& pattern,
                             unsigned long long budget = default_step_budget);

/// Re-verification by direct bit tests; every surfaced witness passes this.
bool verify_embedding(const Graph& host, const Graph& pattern, const Embedding& e);
bool verify_packing(const Graph& host, const std::vector<Graph>& patterns,
                    const PackingWitness& w);

}  // namespace xlab

#endif
