#ifndef XLAB_SPECTRAL_HPP
#define XLAB_SPECTRAL_HPP

#include <string>
#include <vector>

#include "xlab/constructions.hpp"
#include "xlab/family.hpp"
#include "xlab/graph.hpp"

namespace xlab {

struct SpectralReport {
    double rho = 0;
    std::vector<double> perron;  // unit nonnegative eigenvector
    double residual = 0;         // ||A x - rho x||_inf, certified <= tol
    int iterations = 0;
};

inline constexpr double default_spectral_tol = 1e-12;
inline constexpr double default_tie_tol = 1e-9;

/// Power iteration on A + I with Rayleigh extraction; deterministic all-ones
/// start. Disconnected inputs are handled per component, the max-rho
/// component's vector zero-extended. Throws if the residual target is not
/// certified within the iteration cap.
SpectralReport spectral_radius(const Graph& g, double tol = default_spectral_tol);

struct SpexReport {
    int n = 0;
    std::string family;
    double rho_star = 0;
    std::vector<Graph> spex_set;  // canonical, within tie_tol of rho_star
    std::vector<double> rhos;
    std::string method;
    unsigned long long nodes_explored = 0;
    double elapsed_s = 0;
    bool incomplete = false;
    bool tie = false;  // more than one graph within tie_tol
};

SpexReport spex_search(int n, const GraphFamily& fam,
                       double tol = default_spectral_tol,
                       double tie_tol = default_tie_tol,
                       unsigned long long class_budget = ~0ull,
                       int threads = 1);

/// |x^T y (rho' - rho) - x^T (A(g') - A(g)) y| for the Perron pairs of two
/// connected graphs on the same vertex set; vanishes identically.
double eigen_identity_residual(const Graph& g, const Graph& g_prime,
                               double tol = default_spectral_tol);

struct GapEntry {
    std::vector<int> parts;  // nonincreasing, n_1 - n_r >= 2
    double gap;              // rho(T_{n,r}) - rho(K)
};

struct GapReport {
    std::vector<GapEntry> entries;
    double min_gap_times_n = 0;  // empirical gamma
};

GapReport multipartite_gap_check(int n, int r, double tol = default_spectral_tol);

/// rho(G*) - rho(T_{n,r}) >= 2 alpha1 / n - 6 alpha1 / n^2 for the star
/// construction with alpha1 embedded edges.
bool construction_gap_check(int n, int r, int alpha1,
                            double tol = default_spectral_tol);

/// Both part-sum inequalities for every partite set of a T_{n,r}-plus-(k-1)-
/// edges graph with its known partition.
bool perron_part_sum_bounds(const Graph& gstar, const Partition& partition,
                            int k, double tol = default_spectral_tol);

}  // namespace xlab

#endif
