#include "xlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace xlab {

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

}  // namespace

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex index out of range");
}

Graph Graph::empty(int n) {
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("vertex count out of range");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), 0);
    return g;
}

Graph Graph::with_edges(int n, const EdgeList& edges) {
    Graph g = empty(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v)
            throw std::invalid_argument("loop requested");
        if (g.has_edge(u, v))
            throw std::invalid_argument("duplicate edge");
        g.adj_[u] |= bit(v);
        g.adj_[v] |= bit(u);
    }
    return g;
}

int Graph::size() const {
    int total = 0;
    for (std::uint64_t row : adj_) total += std::popcount(row);
    return total / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

std::uint64_t Graph::vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (bit(n_) - 1);
}

EdgeList Graph::edges() const {
    EdgeList out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t rest = adj_[u] >> (u + 1) << (u + 1);
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop requested");
    Graph g = *this;
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    Graph g = *this;
    g.adj_[u] &= ~bit(v);
    g.adj_[v] &= ~bit(u);
    return g;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size mismatch");
    Graph g = empty(n_);
    for (int i = 0; i < n_; ++i) {
        std::uint64_t row = adj_[i];
        while (row) {
            int j = std::countr_zero(row);
            row &= row - 1;
            g.adj_[perm[i]] |= bit(perm[j]);
        }
    }
    return g;
}

Graph Graph::induced(std::uint64_t keep) const {
    keep &= vertex_mask();
    std::vector<int> remap(static_cast<std::size_t>(n_), -1);
    int m = 0;
    for (int v = 0; v < n_; ++v)
        if ((keep >> v) & 1) remap[v] = m++;
    Graph g = empty(m);
    for (int u = 0; u < n_; ++u) {
        if (remap[u] < 0) continue;
        std::uint64_t row = adj_[u] & keep;
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            g.adj_[remap[u]] |= bit(remap[v]);
        }
    }
    return g;
}

Graph Graph::without_isolated() const {
    std::uint64_t keep = 0;
    for (int v = 0; v < n_; ++v)
        if (adj_[v]) keep |= bit(v);
    return induced(keep);
}

bool Graph::operator<(const Graph& other) const {
    if (n_ != other.n_) return n_ < other.n_;
    return encode() < other.encode();
}

std::vector<std::uint64_t> Graph::encode() const {
    // MSB-first packing so vector comparison is lexicographic on bits.
    std::vector<std::uint64_t> out;
    int k = 0;
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            if (k % 64 == 0) out.push_back(0);
            if ((adj_[i] >> j) & 1)
                out.back() |= std::uint64_t{1} << (63 - k % 64);
            ++k;
        }
    }
    return out;
}

std::size_t GraphHash::operator()(const Graph& g) const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ULL;
    };
    mix(static_cast<std::uint64_t>(g.order()));
    for (std::uint64_t w : g.encode()) mix(w);
    return static_cast<std::size_t>(h);
}

Graph standard_graph(StandardKind kind, int n) {
    EdgeList e;
    switch (kind) {
        case StandardKind::complete:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
            return Graph::with_edges(n, e);
        case StandardKind::empty:
            return Graph::empty(n);
        case StandardKind::cycle:
            if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
            for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
            for (auto& [u, v] : e)
                if (u > v) std::swap(u, v);
            return Graph::with_edges(n, e);
        case StandardKind::path:
            for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
            return Graph::with_edges(n, e);
        case StandardKind::star:
            // S_n: n vertices, center first, n-1 edges.
            for (int i = 1; i < n; ++i) e.emplace_back(0, i);
            return Graph::with_edges(n, e);
        case StandardKind::matching:
            if (n % 2 != 0) throw std::invalid_argument("matching needs even n");
            for (int i = 0; i < n; i += 2) e.emplace_back(i, i + 1);
            return Graph::with_edges(n, e);
        case StandardKind::wheel:
            if (n < 4) throw std::invalid_argument("wheel needs n >= 4");
            return join(standard_graph(StandardKind::complete, 1),
                        standard_graph(StandardKind::cycle, n - 1));
    }
    throw std::invalid_argument("unknown graph kind");
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
    int n = 0;
    for (int s : part_sizes) {
        if (s <= 0) throw std::invalid_argument("part sizes must be positive");
        n += s;
    }
    if (n > Graph::max_vertices)
        throw std::invalid_argument("vertex count out of range");
    EdgeList e;
    int start = 0;
    for (std::size_t p = 0; p < part_sizes.size(); ++p) {
        int end = start + part_sizes[p];
        for (int u = start; u < end; ++u)
            for (int v = end; v < n; ++v) e.emplace_back(u, v);
        start = end;
    }
    return Graph::with_edges(n, e);
}

Graph turan(int n, int r) {
    if (r < 1 || r > n) throw std::invalid_argument("turan needs 1 <= r <= n");
    std::vector<int> parts(static_cast<std::size_t>(r), n / r);
    for (int i = 0; i < n % r; ++i) ++parts[i];  // larger parts first
    return complete_multipartite(parts);
}

Graph join(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > Graph::max_vertices)
        throw std::invalid_argument("join exceeds vertex cap");
    Graph out = disjoint_union(g, h);
    EdgeList e = out.edges();
    for (int u = 0; u < g.order(); ++u)
        for (int v = g.order(); v < n; ++v) e.emplace_back(u, v);
    return Graph::with_edges(n, e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > Graph::max_vertices)
        throw std::invalid_argument("union exceeds vertex cap");
    EdgeList e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(u + g.order(), v + g.order());
    return Graph::with_edges(n, e);
}

std::vector<std::uint64_t> components(const Graph& g) {
    std::vector<std::uint64_t> comps;
    std::uint64_t seen = 0;
    for (int v = 0; v < g.order(); ++v) {
        if ((seen >> v) & 1) continue;
        std::uint64_t comp = std::uint64_t{1} << v;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int u = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(u);
            }
            frontier = next & ~comp;
            comp |= next;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.order() <= 1 || components(g).size() == 1;
}

// ---------------------------------------------------------------------------
// Canonical labeling: equitable-partition refinement, twin-cell collapse,
// backtracking over remaining non-singleton cells, maximal encoding wins.

namespace {

using Cells = std::vector<std::vector<int>>;

void refine(const Graph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            std::uint64_t splitter = 0;
            for (int v : cells[s]) splitter |= std::uint64_t{1} << v;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (cells[c].size() < 2) continue;
                auto key = [&](int v) {
                    return std::popcount(g.neighbors(v) & splitter);
                };
                int k0 = key(cells[c][0]);
                bool uniform = std::all_of(cells[c].begin(), cells[c].end(),
                                           [&](int v) { return key(v) == k0; });
                if (uniform) continue;
                std::stable_sort(cells[c].begin(), cells[c].end(),
                                 [&](int a, int b) { return key(a) < key(b); });
                Cells pieces;
                for (int v : cells[c]) {
                    if (pieces.empty() || key(pieces.back()[0]) != key(v))
                        pieces.push_back({});
                    pieces.back().push_back(v);
                }
                cells.erase(cells.begin() + static_cast<long>(c));
                cells.insert(cells.begin() + static_cast<long>(c),
                             pieces.begin(), pieces.end());
                changed = true;
                break;
            }
        }
    }
}

// All vertices of the cell pairwise interchangeable by an automorphism.
bool twin_cell(const Graph& g, const std::vector<int>& cell) {
    for (std::size_t a = 0; a < cell.size(); ++a) {
        for (std::size_t b = a + 1; b < cell.size(); ++b) {
            int u = cell[a], w = cell[b];
            std::uint64_t strip =
                ~((std::uint64_t{1} << u) | (std::uint64_t{1} << w));
            if ((g.neighbors(u) & strip) != (g.neighbors(w) & strip))
                return false;
        }
    }
    return true;
}

struct CanonSearch {
    const Graph& g;
    std::vector<std::uint64_t> best;
    std::vector<int> best_perm;
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph) {}

    void run(Cells cells) {
        refine(g, cells);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() < 2) continue;
            if (twin_cell(g, cells[c])) {
                Cells split;
                split.reserve(cells.size() + cells[c].size());
                split.assign(cells.begin(), cells.begin() + static_cast<long>(c));
                for (int v : cells[c]) split.push_back({v});
                split.insert(split.end(), cells.begin() + static_cast<long>(c) + 1,
                             cells.end());
                cells = std::move(split);
                continue;
            }
            for (int v : cells[c]) {
                Cells next(cells.begin(), cells.begin() + static_cast<long>(c));
                next.push_back({v});
                std::vector<int> rest;
                for (int w : cells[c])
                    if (w != v) rest.push_back(w);
                next.push_back(std::move(rest));
                next.insert(next.end(), cells.begin() + static_cast<long>(c) + 1,
                            cells.end());
                run(std::move(next));
            }
            return;
        }
        // Discrete partition: candidate labeling.
        std::vector<int> perm(static_cast<std::size_t>(g.order()));
        for (std::size_t pos = 0; pos < cells.size(); ++pos)
            perm[static_cast<std::size_t>(cells[pos][0])] = static_cast<int>(pos);
        auto enc = g.permuted(perm).encode();
        if (!have_best || enc > best) {
            best = std::move(enc);
            best_perm = std::move(perm);
            have_best = true;
        }
    }
};

}  // namespace

Graph canonical_form(const Graph& g) {
    if (g.order() == 0) return g;
    Cells start(1);
    start[0].resize(static_cast<std::size_t>(g.order()));
    std::iota(start[0].begin(), start[0].end(), 0);
    // Seed with degrees so refinement starts from an informative partition.
    std::stable_sort(start[0].begin(), start[0].end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b);
    });
    Cells cells;
    for (int v : start[0]) {
        if (cells.empty() || g.degree(cells.back()[0]) != g.degree(v))
            cells.push_back({});
        cells.back().push_back(v);
    }
    CanonSearch search(g);
    search.run(cells);
    return g.permuted(search.best_perm);
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    return canonical_form(g) == canonical_form(h);
}

// ---------------------------------------------------------------------------
// graph6

Graph parse_graph6(const std::string& text) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size())
            throw std::invalid_argument("graph6: truncated input");
        unsigned char c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };
    long long n;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        int a = next();
        if (a < 63) {
            int b = next(), c = next();
            n = (static_cast<long long>(a) << 12) | (b << 6) | c;
        } else {
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | next();
        }
    }
    if (n > Graph::max_vertices)
        throw std::invalid_argument("graph6: graph exceeds 64 vertices");
    int nv = static_cast<int>(n);
    long long nbits = static_cast<long long>(nv) * (nv - 1) / 2;
    Graph g = Graph::empty(nv);
    int buf = 0, avail = 0;
    for (long long k = 0; k < nbits; ++k) {
        if (avail == 0) {
            buf = next();
            avail = 6;
        }
        int b = (buf >> (avail - 1)) & 1;
        --avail;
        if (b) {
            // column-major upper triangle: k-th bit is x_{i,j} with j the
            // column, bits for column j preceded by j(j-1)/2 bits.
            long long j = 1;
            while (j * (j + 1) / 2 <= k) ++j;
            long long i = k - j * (j - 1) / 2;
            g = g.with_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    if (avail > 0 && (buf & ((1 << avail) - 1)) != 0)
        throw std::invalid_argument("graph6: nonzero padding bits");
    if (pos != text.size())
        throw std::invalid_argument("graph6: trailing bytes");
    return g;
}

std::string to_graph6(const Graph& g) {
    if (g.order() >= 63)
        throw std::invalid_argument("graph6: only short form (n < 63) emitted");
    std::string out;
    out.push_back(static_cast<char>(63 + g.order()));
    int buf = 0, used = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) {
            buf = (buf << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(63 + buf));
                buf = used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>(63 + (buf << (6 - used))));
    return out;
}

}  // namespace xlab
