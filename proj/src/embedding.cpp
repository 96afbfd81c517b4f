#include "xlab/embedding.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "xlab/family.hpp"

namespace xlab {

namespace {

struct BudgetExhausted {};

// Pattern vertex order: start at max degree, then greedily prefer vertices
// with most already-ordered neighbors (ties by degree). Keeps the partial
// embedding connected whenever the pattern is.
std::vector<int> pattern_order(const Graph& p) {
    int n = p.order();
    std::vector<int> order;
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_conn = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            int conn = 0;
            for (int u : order)
                if (p.has_edge(u, v)) ++conn;
            int deg = p.degree(v);
            if (conn > best_conn || (conn == best_conn && deg > best_deg)) {
                best = v;
                best_conn = conn;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed[static_cast<std::size_t>(best)] = true;
    }
    return order;
}

struct EmbedSearch {
    const Graph& host;
    const Graph& pattern;
    const std::vector<std::uint64_t>* forbidden;
    unsigned long long budget;
    unsigned long long& steps;
    std::vector<int> order;                 // pattern vertices in search order
    std::vector<int> map;                   // pattern vertex -> host vertex
    std::function<bool(const Embedding&)> on_witness;  // true = stop

    std::uint64_t allowed_from(int hu, int /*pv*/) const {
        std::uint64_t nb = host.neighbors(hu);
        if (forbidden) nb &= ~(*forbidden)[static_cast<std::size_t>(hu)];
        return nb;
    }

    int effective_degree(int hv) const {
        std::uint64_t nb = host.neighbors(hv);
        if (forbidden) nb &= ~(*forbidden)[static_cast<std::size_t>(hv)];
        return std::popcount(nb);
    }

    // Returns true if the search was stopped by the callback.
    bool recurse(std::size_t depth, std::uint64_t used) {
        if (depth == order.size()) {
            Embedding e{map};
            return on_witness(e);
        }
        int pv = order[depth];
        std::uint64_t cands = host.vertex_mask() & ~used;
        for (std::size_t d = 0; d < depth; ++d) {
            int pu = order[d];
            if (pattern.has_edge(pu, pv))
                cands &= allowed_from(map[static_cast<std::size_t>(pu)], pv);
        }
        int pdeg = pattern.degree(pv);
        while (cands) {
            int hv = std::countr_zero(cands);
            cands &= cands - 1;
            if (++steps > budget) throw BudgetExhausted{};
            if (effective_degree(hv) < pdeg) continue;
            map[static_cast<std::size_t>(pv)] = hv;
            if (recurse(depth + 1, used | (std::uint64_t{1} << hv))) return true;
        }
        return false;
    }
};

// Enumerates embeddings in deterministic order; stops when the callback
// returns true. `steps` is a shared counter checked against `budget`; a
// blown budget propagates as BudgetExhausted unless catch_exhaustion is set.
SearchStatus enumerate_embeddings(const Graph& host, const Graph& pattern,
                                  unsigned long long budget,
                                  const std::vector<std::uint64_t>* forbidden,
                                  std::function<bool(const Embedding&)> cb,
                                  unsigned long long& steps,
                                  bool catch_exhaustion) {
    if (pattern.order() > host.order())
        throw std::invalid_argument("contains_subgraph: pattern larger than host");
    if (pattern.order() > 16)
        throw std::invalid_argument("contains_subgraph: pattern over size budget");
    EmbedSearch s{host, pattern, forbidden, budget, steps};
    s.order = pattern_order(pattern);
    s.map.assign(static_cast<std::size_t>(pattern.order()), -1);
    s.on_witness = std::move(cb);
    bool stopped = false;
    if (catch_exhaustion) {
        try {
            stopped = s.recurse(0, 0);
        } catch (const BudgetExhausted&) {
            return SearchStatus::exhausted;
        }
    } else {
        stopped = s.recurse(0, 0);
    }
    return stopped ? SearchStatus::present : SearchStatus::absent;
}

}  // namespace

bool verify_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
    if (static_cast<int>(e.map.size()) != pattern.order()) return false;
    std::uint64_t used = 0;
    for (int hv : e.map) {
        if (hv < 0 || hv >= host.order()) return false;
        if ((used >> hv) & 1) return false;  // injectivity
        used |= std::uint64_t{1} << hv;
    }
    for (auto [u, v] : pattern.edges())
        if (!host.has_edge(e.map[static_cast<std::size_t>(u)],
                           e.map[static_cast<std::size_t>(v)]))
            return false;
    return true;
}

EmbedResult contains_subgraph(const Graph& host, const Graph& pattern,
                              unsigned long long budget,
                              const std::vector<std::uint64_t>* forbidden) {
    EmbedResult result;
    std::optional<Embedding> found;
    result.status = enumerate_embeddings(
        host, pattern, budget, forbidden,
        [&](const Embedding& e) {
            found = e;
            return true;
        },
        result.steps, /*catch_exhaustion=*/true);
    if (result.status == SearchStatus::present) {
        if (!verify_embedding(host, pattern, *found))
            throw std::logic_error("embedding failed re-verification");
        result.embedding = std::move(found);
    }
    return result;
}

SearchStatus family_free_status(const Graph& host, const GraphFamily& fam,
                                unsigned long long budget) {
    for (const Graph& h : fam.members()) {
        if (h.order() > host.order()) continue;  // cannot embed
        EmbedResult r = contains_subgraph(host, h, budget);
        if (r.status == SearchStatus::present) return SearchStatus::present;
        if (r.status == SearchStatus::exhausted) return SearchStatus::exhausted;
        budget -= r.steps;
    }
    return SearchStatus::absent;
}

bool is_family_free(const Graph& host, const GraphFamily& fam,
                    unsigned long long budget) {
    SearchStatus s = family_free_status(host, fam, budget);
    if (s == SearchStatus::exhausted)
        throw std::runtime_error("is_family_free: step budget exhausted");
    return s == SearchStatus::absent;
}

namespace {

EdgeList image_edges(const Graph& pattern, const Embedding& e) {
    EdgeList out;
    for (auto [u, v] : pattern.edges()) {
        int a = e.map[static_cast<std::size_t>(u)];
        int b = e.map[static_cast<std::size_t>(v)];
        if (a > b) std::swap(a, b);
        out.emplace_back(a, b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct PackSearch {
    const Graph& host;
    const std::vector<Graph>& patterns;
    std::vector<bool> same_as_prev;  // pattern i isomorphic to pattern i-1
    unsigned long long budget;
    unsigned long long steps = 0;
    std::vector<std::uint64_t> used_edges;
    std::vector<Embedding> copies;
    std::vector<EdgeList> copy_edges;
    bool done = false;

    bool place(std::size_t i) {
        if (i == patterns.size()) return true;
        const Graph& p = patterns[i];
        SearchStatus s = enumerate_embeddings(
            host, p, budget, &used_edges,
            [&](const Embedding& e) {
                EdgeList img = image_edges(p, e);
                // Symmetry break between isomorphic consecutive patterns:
                // image edge sets must be nondecreasing.
                if (i > 0 && same_as_prev[i] && img < copy_edges.back())
                    return false;
                for (auto [a, b] : img) {
                    used_edges[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
                    used_edges[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
                }
                copies.push_back(e);
                copy_edges.push_back(img);
                if (place(i + 1)) return true;
                copies.pop_back();
                copy_edges.pop_back();
                for (auto [a, b] : img) {
                    used_edges[static_cast<std::size_t>(a)] &= ~(std::uint64_t{1} << b);
                    used_edges[static_cast<std::size_t>(b)] &= ~(std::uint64_t{1} << a);
                }
                return false;
            },
            steps, /*catch_exhaustion=*/false);
        return s == SearchStatus::present;
    }
};

}  // namespace

bool verify_packing(const Graph& host, const std::vector<Graph>& patterns,
                    const PackingWitness& w) {
    if (w.copies.size() != patterns.size()) return false;
    std::vector<std::uint64_t> seen(static_cast<std::size_t>(host.order()), 0);
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        if (!verify_embedding(host, patterns[i], w.copies[i])) return false;
        for (auto [a, b] : w.copy_edges[i]) {
            if ((seen[static_cast<std::size_t>(a)] >> b) & 1) return false;
            seen[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
            seen[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
        }
    }
    return true;
}

PackingResult find_edge_disjoint(const Graph& host,
                                 const std::vector<Graph>& patterns,
                                 unsigned long long budget) {
    long long need = 0;
    for (const Graph& p : patterns) need += p.size();
    if (need > host.size()) return {SearchStatus::absent, std::nullopt, 0};

    PackSearch s{host, patterns, {}, budget};
    s.same_as_prev.assign(patterns.size(), false);
    for (std::size_t i = 1; i < patterns.size(); ++i)
        s.same_as_prev[i] = is_isomorphic(patterns[i], patterns[i - 1]);
    s.used_edges.assign(static_cast<std::size_t>(host.order()), 0);

    PackingResult result;
    try {
        if (s.place(0)) {
            PackingWitness w{std::move(s.copies), std::move(s.copy_edges)};
            if (!verify_packing(host, patterns, w))
                throw std::logic_error("packing failed re-verification");
            result.status = SearchStatus::present;
            result.witness = std::move(w);
        } else {
            result.status = SearchStatus::absent;
        }
    } catch (const BudgetExhausted&) {
        result.status = SearchStatus::exhausted;
    }
    result.steps = s.steps;
    return result;
}

int max_edge_disjoint_copies(const Graph& host, const Graph& pattern,
                             unsigned long long budget) {
    if (pattern.size() == 0)
        throw std::invalid_argument("max_edge_disjoint_copies: edgeless pattern");
    int cap = host.size() / pattern.size();
    int k = 0;
    while (k < cap) {
        std::vector<Graph> ps(static_cast<std::size_t>(k) + 1, pattern);
        PackingResult r = find_edge_disjoint(host, ps, budget);
        if (r.status == SearchStatus::exhausted)
            throw std::runtime_error("max_edge_disjoint_copies: budget exhausted");
        if (r.status == SearchStatus::absent) break;
        ++k;
    }
    return k;
}

}  // namespace xlab
