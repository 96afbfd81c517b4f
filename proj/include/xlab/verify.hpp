#ifndef XLAB_VERIFY_HPP
#define XLAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "xlab/graph.hpp"

namespace xlab {

enum class CheckStatus { pass, small_n_exception, fail };

struct CheckInstance {
    std::string instance;
    CheckStatus status;
    std::string detail;
};

struct CheckReport {
    std::string id;
    std::vector<CheckInstance> instances;

    bool any_fail() const;
    bool any_exception() const;
};

struct VerifyOptions {
    int n_min = -1, n_max = -1;  // -1: per-id default
    int cases = 100;
    std::uint64_t seed = 20240901;
    int k = 2;
    std::string pattern = "K3";  // F_i for 1.4 / 1.5
    int nu_max = 3, delta_max = 3;
    int s = 3;                   // Ex6
    int threads = 1;
};

/// Runs the numeric/desk-scale suite for one theorem or lemma id:
/// 1.2, 1.3, 1.4, 1.5, L2.2, L3.3, L3.4, E5.1, E5.6, Ex6.
CheckReport verify_theorem(const std::string& id, const VerifyOptions& opt);

const char* to_string(CheckStatus s);

}  // namespace xlab

#endif
