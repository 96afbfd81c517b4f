#ifndef XLAB_ENUMERATE_HPP
#define XLAB_ENUMERATE_HPP

#include <functional>

#include "xlab/graph.hpp"

namespace xlab {

struct EnumStats {
    unsigned long long classes = 0;
    bool complete = true;
};

/// Visits every isomorphism class of graphs on exactly n labeled vertices
/// satisfying `keep` (which must be hereditary under edge removal), each
/// class exactly once, in canonical form. DFS from the empty graph, adding
/// one edge at a time with canonical-form deduplication.
EnumStats enumerate_classes(int n,
                            const std::function<bool(const Graph&)>& keep,
                            const std::function<void(const Graph&)>& visit,
                            unsigned long long class_budget = ~0ull);

}  // namespace xlab

#endif
