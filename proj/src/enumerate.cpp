#include "xlab/enumerate.hpp"

#include <unordered_set>
#include <vector>

namespace xlab {

EnumStats enumerate_classes(int n,
                            const std::function<bool(const Graph&)>& keep,
                            const std::function<void(const Graph&)>& visit,
                            unsigned long long class_budget) {
    EnumStats stats;
    Graph root = Graph::empty(n);
    if (!keep(root)) return stats;
    std::unordered_set<Graph, GraphHash> seen;
    std::vector<Graph> stack;
    Graph croot = canonical_form(root);
    seen.insert(croot);
    stack.push_back(croot);
    while (!stack.empty()) {
        if (stats.classes >= class_budget) {
            stats.complete = false;
            return stats;
        }
        Graph g = std::move(stack.back());
        stack.pop_back();
        ++stats.classes;
        visit(g);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (g.has_edge(u, v)) continue;
                Graph child = g.with_edge(u, v);
                if (!keep(child)) continue;
                Graph c = canonical_form(child);
                if (seen.insert(c).second) stack.push_back(std::move(c));
            }
        }
    }
    return stats;
}

}  // namespace xlab
