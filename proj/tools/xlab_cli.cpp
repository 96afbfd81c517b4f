// Command line frontend: decompose / ex / spex / verify / construct.
// Every run emits a JSON manifest on stdout.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "xlab/constructions.hpp"
#include "xlab/decomposition.hpp"
#include "xlab/embedding.hpp"
#include "xlab/extremal.hpp"
#include "xlab/family.hpp"
#include "xlab/invariants.hpp"
#include "xlab/spectral.hpp"
#include "xlab/verify.hpp"

using nlohmann::json;

namespace {

constexpr const char* tool_version = "0.1.0";

enum ExitCode {
    exit_ok = 0,
    exit_hard_fail = 1,
    exit_parse = 2,
    exit_precondition = 3,
    exit_budget = 4,
    exit_incomplete = 5,
};

struct Common {
    int threads = 0;  // 0: XLAB_THREADS, then hardware_concurrency
    std::uint64_t seed = 20240901;
    bool deterministic = false;
};

int resolve_threads(int flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("XLAB_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

json g6_array(const std::vector<xlab::Graph>& gs) {
    json arr = json::array();
    for (const auto& g : gs) arr.push_back(xlab::to_graph6(g));
    return arr;
}

json manifest(const std::string& command, json parameters, json result,
              double elapsed_s, bool deterministic,
              json exceptions = json::array()) {
    json m;
    m["command"] = command;
    m["parameters"] = std::move(parameters);
    m["tool_version"] = tool_version;
    if (!deterministic) m["elapsed_s"] = elapsed_s;
    m["result"] = std::move(result);
    m["exceptions"] = std::move(exceptions);
    return m;
}

void emit(const json& m) { std::cout << m.dump(2) << "\n"; }

// Family specs may name a .g6 file with @path.
xlab::GraphFamily load_family(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::invalid_argument("cannot open " + spec.substr(1));
        std::vector<xlab::Graph> members;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            members.push_back(xlab::parse_graph6(line));
        }
        return xlab::GraphFamily::from_members(spec, std::move(members));
    }
    return xlab::parse_family(spec);
}

int classify_error(const std::exception& e) {
    std::string msg = e.what();
    if (msg.find("budget") != std::string::npos) return exit_budget;
    return exit_precondition;
}

int run_decompose(const std::string& family_spec, const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    xlab::GraphFamily fam = load_family(family_spec);
    xlab::DecompositionReport rep = xlab::decomposition_family(fam);
    json result;
    result["family"] = fam.name();
    result["members"] = g6_array(fam.members());
    result["r"] = rep.r;
    result["phi"] = rep.phi;
    result["family_M"] = g6_array(rep.family_m);
    result["nu_star"] = rep.nu_star ? json(*rep.nu_star) : json(nullptr);
    result["delta_star"] = rep.delta_star ? json(*rep.delta_star) : json(nullptr);
    result["condition_ii"] = rep.condition_ii;
    double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(manifest("decompose", {{"family", family_spec}}, result, el, c.deterministic));
    return exit_ok;
}

json extremal_json(const xlab::ExtremalReport& rep, bool deterministic) {
    json r;
    r["n"] = rep.n;
    r["family"] = rep.family;
    r["value"] = rep.value;
    r["extremal"] = g6_array(rep.extremal);
    r["method"] = rep.method;
    r["nodes_explored"] = rep.nodes_explored;
    if (!deterministic) r["elapsed_s"] = rep.elapsed_s;
    r["incomplete"] = rep.incomplete;
    if (rep.incomplete) r["frontier_hash"] = rep.frontier_hash;
    return r;
}

int run_ex(int n, const std::string& family_spec, const std::string& mode,
           unsigned long long budget, const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    xlab::GraphFamily fam = load_family(family_spec);
    xlab::ExtremalReport rep = mode == "oracle"
                                   ? xlab::ex_oracle(n, fam, resolve_threads(c.threads))
                                   : xlab::ex_search(n, fam, budget);
    double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(manifest("ex", {{"n", n}, {"family", family_spec}, {"mode", mode}},
                  extremal_json(rep, c.deterministic), el, c.deterministic));
    return rep.incomplete ? exit_incomplete : exit_ok;
}

int run_spex(int n, const std::string& family_spec, double tol, double tie_tol,
             unsigned long long budget, const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    xlab::GraphFamily fam = load_family(family_spec);
    xlab::SpexReport rep =
        xlab::spex_search(n, fam, tol, tie_tol, budget, resolve_threads(c.threads));
    json result;
    result["n"] = rep.n;
    result["family"] = rep.family;
    result["rho_star"] = rep.rho_star;
    result["spex_set"] = g6_array(rep.spex_set);
    result["rhos"] = rep.rhos;
    result["tie"] = rep.tie;
    result["method"] = rep.method;
    result["nodes_explored"] = rep.nodes_explored;
    if (!c.deterministic) result["elapsed_s"] = rep.elapsed_s;
    result["incomplete"] = rep.incomplete;
    double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(manifest("spex",
                  {{"n", n}, {"family", family_spec}, {"tol", tol}, {"tie_tol", tie_tol}},
                  result, el, c.deterministic));
    return rep.incomplete ? exit_incomplete : exit_ok;
}

int run_verify(const std::string& id, const xlab::VerifyOptions& opt,
               const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    xlab::CheckReport rep = xlab::verify_theorem(id, opt);
    json result;
    result["id"] = rep.id;
    json instances = json::array();
    json exceptions = json::array();
    int passes = 0, fails = 0;
    for (const auto& inst : rep.instances) {
        json j;
        j["instance"] = inst.instance;
        j["status"] = xlab::to_string(inst.status);
        if (!inst.detail.empty()) j["detail"] = inst.detail;
        instances.push_back(j);
        if (inst.status == xlab::CheckStatus::pass) ++passes;
        if (inst.status == xlab::CheckStatus::fail) ++fails;
        if (inst.status == xlab::CheckStatus::small_n_exception) exceptions.push_back(j);
    }
    result["instances"] = instances;
    result["passes"] = passes;
    result["fails"] = fails;
    double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json params;
    params["id"] = id;
    params["n_min"] = opt.n_min;
    params["n_max"] = opt.n_max;
    params["cases"] = opt.cases;
    params["seed"] = opt.seed;
    params["k"] = opt.k;
    params["F"] = opt.pattern;
    params["s"] = opt.s;
    emit(manifest("verify", params, result, el, c.deterministic, exceptions));
    return rep.any_fail() ? exit_hard_fail : exit_ok;
}

int run_construct(const std::string& name, int n, int r, int k, int s,
                  const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    json result;
    if (name == "turan") {
        result["graph6"] = xlab::to_graph6(xlab::turan(n, r));
    } else if (name == "turan-plus-edges") {
        auto [g, p] = xlab::turan_plus_edges(
            n, r, k, k == 1 ? xlab::EmbedShape::star : xlab::EmbedShape::matching, 0);
        result["graph6"] = xlab::to_graph6(g);
        result["partition"] = p.cls;
    } else if (name == "spex") {
        auto [g, p] = xlab::spex_construction(n, r, k);
        result["graph6"] = xlab::to_graph6(g);
        result["partition"] = p.cls;
    } else if (name == "turan-plus-matching") {
        result["graph6"] = xlab::to_graph6(xlab::turan_plus_matching(n, r));
    } else if (name == "cone") {
        result["graph6"] = xlab::to_graph6(xlab::cone_over_turan(n, r));
    } else if (name == "counterexample-family") {
        result["members"] = g6_array(xlab::counterexample_family(s).members());
    } else if (name == "counterexample-witness") {
        result["graph6"] = xlab::to_graph6(xlab::counterexample_witness(n, s));
    } else {
        throw std::invalid_argument("construct: unknown name " + name);
    }
    double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(manifest("construct",
                  {{"name", name}, {"n", n}, {"r", r}, {"k", k}, {"s", s}},
                  result, el, c.deterministic));
    return exit_ok;
}

// "6..9", "6", or "" (keep per-id defaults)
void parse_range(const std::string& text, int& lo, int& hi) {
    if (text.empty()) return;
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        lo = hi = std::stoi(text);
    } else {
        lo = std::stoi(text.substr(0, dots));
        hi = std::stoi(text.substr(dots + 2));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact extremal and spectral extremal graph computations"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Common common;
    app.add_option("--threads", common.threads, "worker threads (0: XLAB_THREADS or cores)");
    app.add_option("--seed", common.seed, "seed for randomized sweeps");
    app.add_flag("--deterministic", common.deterministic,
                 "omit timing fields for byte-identical reruns");

    std::string family_spec, mode = "search", verify_id, construct_name, n_range;
    int n = 0, r = 2, k = 1, s = 3;
    double tol = xlab::default_spectral_tol, tie_tol = xlab::default_tie_tol;
    unsigned long long budget = ~0ull;
    xlab::VerifyOptions vopt;

    auto* dec = app.add_subcommand("decompose", "decomposition family of a forbidden family");
    dec->add_option("--family", family_spec, "family spec or @file.g6")->required();

    auto* ex = app.add_subcommand("ex", "Turan number and extremal set");
    ex->add_option("--n", n, "vertex count")->required();
    ex->add_option("--family", family_spec)->required();
    ex->add_option("--mode", mode, "oracle | search")
        ->check(CLI::IsMember({"oracle", "search"}));
    ex->add_option("--budget", budget, "class budget for search mode");

    auto* sp = app.add_subcommand("spex", "spectral extremal value and set");
    sp->add_option("--n", n)->required();
    sp->add_option("--family", family_spec)->required();
    sp->add_option("--tol", tol, "eigenvector residual tolerance");
    sp->add_option("--tie-tol", tie_tol, "rho tie tolerance");
    sp->add_option("--budget", budget, "class budget");

    auto* ver = app.add_subcommand("verify", "numeric checks for one theorem id");
    ver->add_option("--id", verify_id,
                    "1.2 | 1.3 | 1.4 | 1.5 | L2.2 | L3.3 | L3.4 | E5.1 | E5.6 | Ex6")
        ->required();
    ver->add_option("--n", n_range, "n or n-range a..b");
    ver->add_option("--n-min", vopt.n_min);
    ver->add_option("--n-max", vopt.n_max);
    ver->add_option("--cases", vopt.cases, "random cases for E5.6");
    ver->add_option("--k", vopt.k, "copy count for 1.4 / 1.5");
    ver->add_option("--F", vopt.pattern, "base pattern for 1.4 / 1.5");
    ver->add_option("--nu-max", vopt.nu_max);
    ver->add_option("--delta-max", vopt.delta_max);
    ver->add_option("--s", vopt.s, "parameter for Ex6");

    auto* con = app.add_subcommand("construct", "named constructions as graph6");
    con->add_option("--name", construct_name,
                    "turan | turan-plus-edges | spex | turan-plus-matching | cone | "
                    "counterexample-family | counterexample-witness")
        ->required();
    con->add_option("--n", n);
    con->add_option("--r", r);
    con->add_option("--k", k, "embedded edge count / copy count");
    con->add_option("--s", s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_parse;
    }

    try {
        if (dec->parsed()) return run_decompose(family_spec, common);
        if (ex->parsed()) return run_ex(n, family_spec, mode, budget, common);
        if (sp->parsed()) return run_spex(n, family_spec, tol, tie_tol, budget, common);
        if (ver->parsed()) {
            parse_range(n_range, vopt.n_min, vopt.n_max);
            vopt.seed = common.seed;
            vopt.threads = resolve_threads(common.threads);
            return run_verify(verify_id, vopt, common);
        }
        if (con->parsed()) return run_construct(construct_name, n, r, k, s, common);
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        std::cerr << "error: " << msg << "\n";
        if (msg.find("parse") != std::string::npos ||
            msg.find("family spec") != std::string::npos ||
            msg.find("graph6") != std::string::npos ||
            msg.find("unknown") != std::string::npos ||
            msg.find("cannot open") != std::string::npos)
            return exit_parse;
        return classify_error(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify_error(e);
    }
    return exit_parse;
}
