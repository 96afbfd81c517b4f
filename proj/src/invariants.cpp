#include "xlab/invariants.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace xlab {

namespace {

constexpr int chi_budget = 16;

// Greedy maximal clique seeded at each vertex; lower bound for chi.
int clique_lower_bound(const Graph& g) {
    int best = g.order() > 0 ? 1 : 0;
    for (int v = 0; v < g.order(); ++v) {
        std::uint64_t cand = g.neighbors(v);
        int size = 1;
        std::uint64_t clique = std::uint64_t{1} << v;
        while (cand) {
            // pick the candidate with most neighbors among remaining candidates
            int pick = -1, pick_deg = -1;
            std::uint64_t c = cand;
            while (c) {
                int u = std::countr_zero(c);
                c &= c - 1;
                int d = std::popcount(g.neighbors(u) & cand);
                if (d > pick_deg) {
                    pick_deg = d;
                    pick = u;
                }
            }
            clique |= std::uint64_t{1} << pick;
            ++size;
            cand &= g.neighbors(pick);
        }
        best = std::max(best, size);
    }
    return best;
}

bool colorable(const Graph& g, int k, int v, std::vector<int>& color) {
    if (v == g.order()) return true;
    int max_used = 0;
    for (int u = 0; u < v; ++u) max_used = std::max(max_used, color[u]);
    std::uint64_t nb = g.neighbors(v);
    // Try only colors 1..min(max_used+1, k): new-color symmetry break.
    for (int c = 1; c <= std::min(max_used + 1, k); ++c) {
        bool ok = true;
        std::uint64_t m = nb;
        while (m) {
            int u = std::countr_zero(m);
            m &= m - 1;
            if (u < v && color[u] == c) {
                ok = false;
                break;
            }
        }
        if (ok) {
            color[v] = c;
            if (colorable(g, k, v + 1, color)) return true;
            color[v] = 0;
        }
    }
    return false;
}

}  // namespace

int chromatic_number(const Graph& g) {
    if (g.order() > chi_budget)
        throw std::invalid_argument("chromatic_number: graph over size budget");
    if (g.order() == 0) return 0;
    if (g.size() == 0) return 1;
    int lb = clique_lower_bound(g);
    for (int k = lb; k <= g.order(); ++k) {
        std::vector<int> color(static_cast<std::size_t>(g.order()), 0);
        if (colorable(g, k, 0, color)) return k;
    }
    return g.order();  // unreachable
}

std::optional<Edge> color_critical_edge(const Graph& g) {
    if (g.size() == 0)
        throw std::invalid_argument("color_critical_edge: edgeless input");
    int chi = chromatic_number(g);
    for (auto [u, v] : g.edges()) {
        if (chromatic_number(g.without_edge(u, v)) < chi) return Edge{u, v};
    }
    return std::nullopt;
}

bool is_color_critical(const Graph& g) {
    return color_critical_edge(g).has_value();
}

// ---------------------------------------------------------------------------
// Maximum matching in general graphs: augmenting paths with blossom
// contraction, O(V^3).

namespace {

struct Blossom {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> match, parent, base;
    std::vector<bool> used, blossom;

    explicit Blossom(const Graph& g) : n(g.order()), adj(static_cast<std::size_t>(n)) {
        for (auto [u, v] : g.edges()) {
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
        match.assign(static_cast<std::size_t>(n), -1);
    }

    int lca(int a, int b) {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (;;) {
            a = base[static_cast<std::size_t>(a)];
            seen[static_cast<std::size_t>(a)] = true;
            if (match[static_cast<std::size_t>(a)] == -1) break;
            a = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(a)])];
        }
        for (;;) {
            b = base[static_cast<std::size_t>(b)];
            if (seen[static_cast<std::size_t>(b)]) return b;
            b = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(b)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[static_cast<std::size_t>(v)] != b) {
            int mv = match[static_cast<std::size_t>(v)];
            blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(v)])] = true;
            blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(mv)])] = true;
            parent[static_cast<std::size_t>(v)] = child;
            child = mv;
            v = parent[static_cast<std::size_t>(mv)];
        }
    }

    int find_path(int root) {
        used.assign(static_cast<std::size_t>(n), false);
        parent.assign(static_cast<std::size_t>(n), -1);
        base.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i;
        used[static_cast<std::size_t>(root)] = true;
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int to : adj[static_cast<std::size_t>(v)]) {
                if (base[static_cast<std::size_t>(v)] == base[static_cast<std::size_t>(to)] ||
                    match[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match[static_cast<std::size_t>(to)] != -1 &&
                     parent[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] != -1)) {
                    int cur = lca(v, to);
                    blossom.assign(static_cast<std::size_t>(n), false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i) {
                        if (blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(i)])]) {
                            base[static_cast<std::size_t>(i)] = cur;
                            if (!used[static_cast<std::size_t>(i)]) {
                                used[static_cast<std::size_t>(i)] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent[static_cast<std::size_t>(to)] == -1) {
                    parent[static_cast<std::size_t>(to)] = v;
                    if (match[static_cast<std::size_t>(to)] == -1) {
                        return to;
                    }
                    used[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] = true;
                    queue.push_back(match[static_cast<std::size_t>(to)]);
                }
            }
        }
        return -1;
    }

    int solve() {
        int res = 0;
        for (int v = 0; v < n; ++v) {
            if (match[static_cast<std::size_t>(v)] != -1) continue;
            int u = find_path(v);
            if (u == -1) continue;
            ++res;
            while (u != -1) {
                int pv = parent[static_cast<std::size_t>(u)];
                int ppv = match[static_cast<std::size_t>(pv)];
                match[static_cast<std::size_t>(u)] = pv;
                match[static_cast<std::size_t>(pv)] = u;
                u = ppv;
            }
        }
        return res;
    }
};

}  // namespace

int matching_number(const Graph& g) {
    if (g.order() == 0) return 0;
    Blossom b(g);
    return b.solve();
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

int chvatal_hanson(int nu, int delta) {
    if (nu < 1 || delta < 1)
        throw std::invalid_argument("chvatal_hanson: arguments must be >= 1");
    int half_up = (delta + 1) / 2;
    return nu * delta + (delta / 2) * (nu / half_up);
}

long long turan_edge_count(int n, int r) {
    if (r < 1 || r > n) throw std::invalid_argument("turan_edge_count: bad r");
    long long total = static_cast<long long>(n) * (n - 1) / 2;
    long long q = n / r, rem = n % r;
    // rem parts of size q+1, r-rem parts of size q
    total -= rem * ((q + 1) * q / 2);
    total -= (r - rem) * (q * (q - 1) / 2);
    return total;
}

InvariantBundle invariant_bundle(const Graph& g) {
    return InvariantBundle{chromatic_number(g), matching_number(g),
                           max_degree(g), g.size()};
}

}  // namespace xlab
