#ifndef XLAB_EXTREMAL_HPP
#define XLAB_EXTREMAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "xlab/family.hpp"
#include "xlab/graph.hpp"

namespace xlab {

struct ExtremalReport {
    int n = 0;
    std::string family;
    int value = 0;                 // ex(n, H)
    std::vector<Graph> extremal;   // EX(n, H), canonical, sorted
    std::string method;            // "exhaustive" or "pruned"
    unsigned long long nodes_explored = 0;
    double elapsed_s = 0;
    bool incomplete = false;
    std::uint64_t frontier_hash = 0;  // resume key for incomplete runs
};

/// Exhaustive scan of all labeled graphs; independent oracle, n <= 7.
ExtremalReport ex_oracle(int n, const GraphFamily& fam, int threads = 1);

/// Isomorphism-class search over family-free graphs, n <= 10.
ExtremalReport ex_search(int n, const GraphFamily& fam,
                         unsigned long long class_budget = ~0ull);

struct EditDistance {
    int alpha1 = 0;                 // edges of g inside parts
    int alpha2 = 0;                 // missing cross edges
    std::vector<int> partition;     // vertex -> part index
};

/// Minimizes alpha1 + alpha2 over balanced r-partitions, ties toward
/// smaller alpha1. Exhaustive partition scan.
EditDistance turan_edit_distance(const Graph& g, int r);

}  // namespace xlab

#endif
