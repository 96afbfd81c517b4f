#include "xlab/extremal.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "xlab/embedding.hpp"
#include "xlab/enumerate.hpp"

namespace xlab {

namespace {

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g = Graph::empty(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1) g = g.with_edge(i, j);
    return g;
}

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ULL;
    return h;
}

struct Incumbent {
    int best = -1;
    std::vector<Graph> winners;  // canonical

    void offer(const Graph& g) {
        int e = g.size();
        if (e < best) return;
        Graph c = canonical_form(g);
        if (e > best) {
            best = e;
            winners.clear();
        }
        if (std::find(winners.begin(), winners.end(), c) == winners.end())
            winners.push_back(std::move(c));
    }

    void merge(const Incumbent& other) {
        if (other.best < best) return;
        if (other.best > best) {
            best = other.best;
            winners = other.winners;
            return;
        }
        for (const Graph& g : other.winners)
            if (std::find(winners.begin(), winners.end(), g) == winners.end())
                winners.push_back(g);
    }
};

}  // namespace

ExtremalReport ex_oracle(int n, const GraphFamily& fam, int threads) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("ex_oracle: n over oracle budget (n <= 7)");
    auto t0 = std::chrono::steady_clock::now();
    int nbits = n * (n - 1) / 2;
    std::uint64_t total = std::uint64_t{1} << nbits;
    threads = std::max(1, threads);
    std::vector<Incumbent> partial(static_cast<std::size_t>(threads));
    std::vector<unsigned long long> counts(static_cast<std::size_t>(threads), 0);

    auto work = [&](int t) {
        Incumbent& inc = partial[static_cast<std::size_t>(t)];
        std::uint64_t lo = total / static_cast<std::uint64_t>(threads) *
                           static_cast<std::uint64_t>(t);
        std::uint64_t hi = (t == threads - 1)
                               ? total
                               : total / static_cast<std::uint64_t>(threads) *
                                     static_cast<std::uint64_t>(t + 1);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            if (std::popcount(mask) < inc.best) continue;
            Graph g = graph_from_mask(n, mask);
            ++counts[static_cast<std::size_t>(t)];
            if (is_family_free(g, fam)) inc.offer(g);
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    Incumbent global;
    unsigned long long nodes = 0;
    for (int t = 0; t < threads; ++t) {
        global.merge(partial[static_cast<std::size_t>(t)]);
        nodes += counts[static_cast<std::size_t>(t)];
    }
    std::sort(global.winners.begin(), global.winners.end());

    ExtremalReport report;
    report.n = n;
    report.family = fam.name();
    report.value = global.best;
    report.extremal = std::move(global.winners);
    report.method = "exhaustive";
    report.nodes_explored = nodes;
    report.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

ExtremalReport ex_search(int n, const GraphFamily& fam,
                         unsigned long long class_budget) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("ex_search: n over search budget (n <= 10)");
    auto t0 = std::chrono::steady_clock::now();
    Incumbent inc;
    std::uint64_t frontier_hash = 1469598103934665603ULL;
    EnumStats stats = enumerate_classes(
        n, [&](const Graph& g) { return is_family_free(g, fam); },
        [&](const Graph& g) {
            inc.offer(g);
            frontier_hash = fnv_mix(frontier_hash, GraphHash{}(g));
        },
        class_budget);
    std::sort(inc.winners.begin(), inc.winners.end());

    ExtremalReport report;
    report.n = n;
    report.family = fam.name();
    report.value = inc.best;
    report.extremal = std::move(inc.winners);
    report.method = "pruned";
    report.nodes_explored = stats.classes;
    report.incomplete = !stats.complete;
    report.frontier_hash = frontier_hash;
    report.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

// ---------------------------------------------------------------------------

namespace {

struct PartitionScan {
    const Graph& g;
    int r;
    std::vector<int> part_sizes;     // balanced, nonincreasing
    std::vector<int> assign;         // vertex -> part
    int best_a1 = -1, best_a2 = -1;
    std::vector<int> best_assign;

    void evaluate() {
        int a1 = 0, a2 = 0;
        for (int u = 0; u < g.order(); ++u) {
            for (int v = u + 1; v < g.order(); ++v) {
                bool same = assign[static_cast<std::size_t>(u)] ==
                            assign[static_cast<std::size_t>(v)];
                bool edge = g.has_edge(u, v);
                if (same && edge) ++a1;
                if (!same && !edge) ++a2;
            }
        }
        int total = a1 + a2;
        if (best_a1 < 0 || total < best_a1 + best_a2 ||
            (total == best_a1 + best_a2 && a1 < best_a1)) {
            best_a1 = a1;
            best_a2 = a2;
            best_assign = assign;
        }
    }

    // Fill parts one at a time; within runs of equal-size parts, pin the
    // smallest unassigned vertex to break part-relabeling symmetry.
    void fill(int part, std::vector<int> remaining) {
        if (part == r) {
            evaluate();
            return;
        }
        int size = part_sizes[static_cast<std::size_t>(part)];
        bool pin = part > 0 &&
                   part_sizes[static_cast<std::size_t>(part - 1)] == size;
        std::vector<int> chosen;
        std::vector<bool> take(remaining.size(), false);
        auto rec = [&](auto&& self, std::size_t from, int need) -> void {
            if (need == 0) {
                std::vector<int> rest;
                for (std::size_t i = 0; i < remaining.size(); ++i)
                    if (!take[i]) rest.push_back(remaining[i]);
                fill(part + 1, std::move(rest));
                return;
            }
            for (std::size_t i = from; i + static_cast<std::size_t>(need) <=
                                       remaining.size();
                 ++i) {
                take[i] = true;
                assign[static_cast<std::size_t>(remaining[i])] = part;
                self(self, i + 1, need - 1);
                take[i] = false;
            }
        };
        if (pin) {
            // first remaining vertex must be here
            take[0] = true;
            assign[static_cast<std::size_t>(remaining[0])] = part;
            rec(rec, 1, size - 1);
        } else {
            rec(rec, 0, size);
        }
    }
};

}  // namespace

EditDistance turan_edit_distance(const Graph& g, int r) {
    if (r < 2) throw std::invalid_argument("turan_edit_distance: r < 2");
    int n = g.order();
    if (r > n) throw std::invalid_argument("turan_edit_distance: r > n");
    int budget = (r == 2) ? 16 : 14;
    if (n > budget)
        throw std::invalid_argument("turan_edit_distance: graph over size budget");
    PartitionScan scan{g, r};
    scan.part_sizes.assign(static_cast<std::size_t>(r), n / r);
    for (int i = 0; i < n % r; ++i) ++scan.part_sizes[static_cast<std::size_t>(i)];
    scan.assign.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    scan.fill(0, std::move(all));
    return EditDistance{scan.best_a1, scan.best_a2, std::move(scan.best_assign)};
}

}  // namespace xlab
