#ifndef XLAB_GRAPH_HPP
#define XLAB_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace xlab {

using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;

/// Undirected simple graph on at most 64 vertices.
/// Row i is the neighborhood of vertex i as a bitmask; the matrix is kept
/// symmetric with a zero diagonal and no bits at positions >= n.
/// Graphs are immutable values: every edit returns a new graph.
class Graph {
public:
    static constexpr int max_vertices = 64;

    Graph() = default;
    static Graph empty(int n);
    static Graph with_edges(int n, const EdgeList& edges);

    int order() const { return n_; }
    int size() const;  // edge count

    bool has_edge(int u, int v) const;
    std::uint64_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const;
    std::uint64_t vertex_mask() const;
    EdgeList edges() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    Graph permuted(const std::vector<int>& perm) const;  // perm[old] = new label
    Graph induced(std::uint64_t keep) const;
    Graph without_isolated() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }
    bool operator<(const Graph& other) const;

    /// Upper-triangle bits packed row-major into words; the comparison key
    /// used for canonical forms and hashing.
    std::vector<std::uint64_t> encode() const;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;

    void check_vertex(int v) const;
};

struct GraphHash {
    std::size_t operator()(const Graph& g) const;
};

enum class StandardKind { complete, empty, cycle, path, star, matching, wheel };

Graph standard_graph(StandardKind kind, int n);
Graph complete_multipartite(const std::vector<int>& part_sizes);
Graph turan(int n, int r);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

bool is_connected(const Graph& g);
std::vector<std::uint64_t> components(const Graph& g);

/// Relabeling such that isomorphic inputs collide bit-for-bit.
/// Equitable-partition refinement plus backtracking over the remaining cells.
Graph canonical_form(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

}  // namespace xlab

#endif
