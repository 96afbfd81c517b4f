#include "xlab/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "xlab/embedding.hpp"
#include "xlab/enumerate.hpp"

namespace xlab {

namespace {

constexpr int max_power_iterations = 2000000;

struct ComponentResult {
    double rho;
    std::vector<double> x;  // indexed by component-local position
    double residual;
    int iterations;
};

ComponentResult power_iterate(const Graph& g, const std::vector<int>& verts,
                              double tol) {
    std::size_t m = verts.size();
    std::vector<double> x(m, 1.0 / std::sqrt(static_cast<double>(m)));
    std::vector<double> y(m), ax(m);
    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < m; ++i) pos[static_cast<std::size_t>(verts[i])] =
        static_cast<int>(i);

    auto apply_a = [&](const std::vector<double>& in, std::vector<double>& out) {
        for (std::size_t i = 0; i < m; ++i) {
            double acc = 0;
            std::uint64_t nb = g.neighbors(verts[i]);
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                acc += in[static_cast<std::size_t>(pos[static_cast<std::size_t>(u)])];
            }
            out[i] = acc;
        }
    };

    double rho = 0, residual = 0;
    int iter = 0;
    for (; iter < max_power_iterations; ++iter) {
        // one step of A + I (the shift handles bipartite periodicity)
        apply_a(x, y);
        double norm = 0;
        for (std::size_t i = 0; i < m; ++i) {
            y[i] += x[i];
            norm += y[i] * y[i];
        }
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < m; ++i) x[i] = y[i] / norm;

        if (iter % 8 == 7 || iter + 1 == max_power_iterations) {
            apply_a(x, ax);
            double rq = 0;
            for (std::size_t i = 0; i < m; ++i) rq += x[i] * ax[i];
            residual = 0;
            for (std::size_t i = 0; i < m; ++i)
                residual = std::max(residual, std::abs(ax[i] - rq * x[i]));
            rho = rq;
            if (residual <= tol) break;
        }
    }
    if (residual > tol)
        throw std::runtime_error("spectral_radius: residual target not reached");
    return {rho, std::move(x), residual, iter + 1};
}

}  // namespace

SpectralReport spectral_radius(const Graph& g, double tol) {
    if (tol <= 0) throw std::invalid_argument("spectral_radius: tol <= 0");
    if (g.order() == 0) throw std::invalid_argument("spectral_radius: empty graph");
    SpectralReport best;
    best.rho = -1;
    for (std::uint64_t comp : components(g)) {
        std::vector<int> verts;
        std::uint64_t c = comp;
        while (c) {
            verts.push_back(std::countr_zero(c));
            c &= c - 1;
        }
        if (verts.size() == 1) {
            if (best.rho < 0) {
                best.rho = 0;
                best.perron.assign(static_cast<std::size_t>(g.order()), 0.0);
                best.perron[static_cast<std::size_t>(verts[0])] = 1.0;
                best.residual = 0;
                best.iterations = 0;
            }
            continue;
        }
        ComponentResult r = power_iterate(g, verts, tol);
        if (r.rho > best.rho) {
            best.rho = r.rho;
            best.perron.assign(static_cast<std::size_t>(g.order()), 0.0);
            for (std::size_t i = 0; i < verts.size(); ++i)
                best.perron[static_cast<std::size_t>(verts[i])] = std::abs(r.x[i]);
            best.residual = r.residual;
            best.iterations = r.iterations;
        }
    }
    return best;
}

SpexReport spex_search(int n, const GraphFamily& fam, double tol, double tie_tol,
                       unsigned long long class_budget, int threads) {
    if (n < 1 || n > 9)
        throw std::invalid_argument("spex_search: n over search budget (n <= 9)");
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Graph> candidates;
    EnumStats stats = enumerate_classes(
        n, [&](const Graph& g) { return is_family_free(g, fam); },
        [&](const Graph& g) { candidates.push_back(g); }, class_budget);

    struct Scored {
        Graph g;
        double rho;
    };
    threads = std::max(1, threads);
    std::vector<std::vector<Scored>> pools(static_cast<std::size_t>(threads));
    std::atomic<double> incumbent{0.0};

    auto work = [&](int t) {
        auto& pool = pools[static_cast<std::size_t>(t)];
        for (std::size_t i = static_cast<std::size_t>(t); i < candidates.size();
             i += static_cast<std::size_t>(threads)) {
            const Graph& g = candidates[i];
            double ub = std::sqrt(2.0 * g.size());
            if (ub < incumbent.load() - tie_tol) continue;
            double rho = spectral_radius(g, tol).rho;
            double cur = incumbent.load();
            while (rho > cur && !incumbent.compare_exchange_weak(cur, rho)) {
            }
            if (rho >= incumbent.load() - tie_tol) pool.push_back({g, rho});
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> ts;
        for (int t = 0; t < threads; ++t) ts.emplace_back(work, t);
        for (auto& th : ts) th.join();
    }

    double rho_star = incumbent.load();
    std::vector<Scored> finalists;
    for (auto& pool : pools)
        for (auto& s : pool)
            if (s.rho >= rho_star - tie_tol) finalists.push_back(std::move(s));
    std::sort(finalists.begin(), finalists.end(),
              [](const Scored& a, const Scored& b) { return a.g < b.g; });

    SpexReport report;
    report.n = n;
    report.family = fam.name();
    report.rho_star = rho_star;
    for (auto& s : finalists) {
        report.spex_set.push_back(std::move(s.g));
        report.rhos.push_back(s.rho);
    }
    report.tie = report.spex_set.size() > 1;
    report.method = "pruned";
    report.nodes_explored = stats.classes;
    report.incomplete = !stats.complete;
    report.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

double eigen_identity_residual(const Graph& g, const Graph& g_prime, double tol) {
    if (g.order() != g_prime.order())
        throw std::invalid_argument("eigen_identity_residual: order mismatch");
    if (!is_connected(g) || !is_connected(g_prime))
        throw std::invalid_argument("eigen_identity_residual: graphs must be connected");
    SpectralReport a = spectral_radius(g, tol);
    SpectralReport b = spectral_radius(g_prime, tol);
    double xy = 0;
    for (int v = 0; v < g.order(); ++v)
        xy += a.perron[static_cast<std::size_t>(v)] *
              b.perron[static_cast<std::size_t>(v)];
    double lhs = xy * (b.rho - a.rho);
    double rhs = 0;
    for (auto [u, v] : g_prime.edges())
        rhs += a.perron[static_cast<std::size_t>(u)] * b.perron[static_cast<std::size_t>(v)] +
               a.perron[static_cast<std::size_t>(v)] * b.perron[static_cast<std::size_t>(u)];
    for (auto [u, v] : g.edges())
        rhs -= a.perron[static_cast<std::size_t>(u)] * b.perron[static_cast<std::size_t>(v)] +
               a.perron[static_cast<std::size_t>(v)] * b.perron[static_cast<std::size_t>(u)];
    return std::abs(lhs - rhs);
}

GapReport multipartite_gap_check(int n, int r, double tol) {
    if (n > 20) throw std::invalid_argument("multipartite_gap_check: n > 20");
    if (r > n || r < 2) throw std::invalid_argument("multipartite_gap_check: bad r");
    double rho_t = spectral_radius(turan(n, r), tol).rho;
    GapReport report;
    report.min_gap_times_n = 0;
    // nonincreasing compositions of n into r positive parts
    std::vector<int> parts(static_cast<std::size_t>(r));
    auto rec = [&](auto&& self, int idx, int left, int cap) -> void {
        if (idx == r - 1) {
            if (left > cap || left < 1) return;
            parts[static_cast<std::size_t>(idx)] = left;
            if (parts[0] - parts[static_cast<std::size_t>(r - 1)] < 2) return;
            double rho_k = spectral_radius(complete_multipartite(parts), tol).rho;
            report.entries.push_back({parts, rho_t - rho_k});
            return;
        }
        for (int s = std::min(cap, left - (r - 1 - idx)); s >= 1; --s) {
            parts[static_cast<std::size_t>(idx)] = s;
            self(self, idx + 1, left - s, s);
        }
    };
    rec(rec, 0, n, n);
    bool first = true;
    for (const auto& e : report.entries) {
        double gn = e.gap * n;
        if (first || gn < report.min_gap_times_n) report.min_gap_times_n = gn;
        first = false;
    }
    return report;
}

bool construction_gap_check(int n, int r, int alpha1, double tol) {
    if (n > 30) throw std::invalid_argument("construction_gap_check: n > 30");
    Graph gstar = alpha1 == 0
                      ? turan(n, r)
                      : turan_plus_edges(n, r, alpha1, EmbedShape::star, 0).first;
    double rho_g = spectral_radius(gstar, tol).rho;
    double rho_t = spectral_radius(turan(n, r), tol).rho;
    double bound = 2.0 * alpha1 / n - 6.0 * alpha1 / (static_cast<double>(n) * n);
    return rho_g - rho_t >= bound - 1e-9;
}

bool perron_part_sum_bounds(const Graph& gstar, const Partition& partition,
                            int k, double tol) {
    int n = gstar.order();
    if (static_cast<int>(partition.cls.size()) != n)
        throw std::invalid_argument("perron_part_sum_bounds: partition size mismatch");
    int r = static_cast<int>(partition.sizes.size());
    std::vector<int> counts(static_cast<std::size_t>(r), 0);
    for (int c : partition.cls) {
        if (c < 0 || c >= r)
            throw std::invalid_argument("perron_part_sum_bounds: bad class index");
        ++counts[static_cast<std::size_t>(c)];
    }
    if (counts != partition.sizes)
        throw std::invalid_argument("perron_part_sum_bounds: sizes inconsistent");
    if (!is_connected(gstar))
        throw std::invalid_argument("perron_part_sum_bounds: graph must be connected");

    SpectralReport sr = spectral_radius(gstar, tol);
    double rho = sr.rho;
    if (rho - k + 1 <= 0) return false;
    double x_v = 0;
    for (double xv : sr.perron) x_v += xv;

    const double eps = 1e-9;
    for (int i = 0; i < r; ++i) {
        double x_part = 0;
        int in_edges = 0;
        for (int u = 0; u < n; ++u) {
            if (partition.cls[static_cast<std::size_t>(u)] != i) continue;
            x_part += sr.perron[static_cast<std::size_t>(u)];
            for (int v = u + 1; v < n; ++v)
                if (partition.cls[static_cast<std::size_t>(v)] == i &&
                    gstar.has_edge(u, v))
                    ++in_edges;
        }
        double x_bar = x_v - x_part;
        double size_i = counts[static_cast<std::size_t>(i)];
        double lower = rho * x_v / (rho + size_i + 2.0 * in_edges / (rho - k + 1));
        double upper = rho * x_v / (rho + size_i + 2.0 * in_edges / rho);
        if (x_bar < lower - eps || x_bar > upper + eps) return false;
    }
    return true;
}

}  // namespace xlab
