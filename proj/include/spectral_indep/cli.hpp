#pragma once

// Command implementations behind the spectral-indep tool. Each command returns
// a JSON run report plus the process exit code, so the same code paths are
// exercised by the tests and by the executable.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "spectral_indep/bounds.hpp"
#include "spectral_indep/catalog.hpp"
#include "spectral_indep/errors.hpp"
#include "spectral_indep/exact_oracle.hpp"
#include "spectral_indep/graph6.hpp"
#include "spectral_indep/json_io.hpp"
#include "spectral_indep/packing_cert.hpp"
#include "spectral_indep/weight_search.hpp"

namespace spectral_indep::cli {

inline constexpr const char* kToolName = "spectral-indep";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kOk = 0, kInvalid = 1, kInputError = 2, kBudgetError = 3 };

struct CommandResult {
    json report;
    int exit_code = kOk;
    std::string csv;  // only filled by commands that support --format csv
};

struct NamedGraph {
    std::string id;
    Graph graph;
};

/// Worker count: explicit request, else SPECTRAL_INDEP_THREADS, else 1.
inline std::size_t thread_count(std::optional<std::size_t> requested = std::nullopt) {
    if (requested && *requested > 0) return *requested;
    if (const char* env = std::getenv("SPECTRAL_INDEP_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1;
}

/// Applies fn to every index on a bounded pool; results keep input order.
template <typename T>
std::vector<T> parallel_map(std::size_t count, std::size_t threads, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) out[i] = fn(i);
    };
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, count));
    if (threads == 1) {
        worker();
        return out;
    }
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

inline json run_header(const std::string& command, json input) {
    return {{"tool", kToolName}, {"version", kToolVersion}, {"schema_version", kSchemaVersion},
            {"command", command}, {"input", std::move(input)}};
}

/// Graphs named by a catalog id or read from a file ("-" is stdin) holding
/// graph6 lines or JSON edge lists.
inline std::vector<NamedGraph> load_graphs(const std::optional<std::string>& catalog_id,
                                           const std::optional<std::string>& path) {
    std::vector<NamedGraph> out;
    if (catalog_id) out.push_back({*catalog_id, catalog(*catalog_id)});
    if (path) {
        std::vector<Graph> graphs;
        if (*path == "-") {
            graphs = read_graphs(std::cin);
        } else {
            std::ifstream in(*path);
            if (!in) throw ParseError("cannot open graph file '" + *path + "'", 0);
            graphs = read_graphs(in);
        }
        for (std::size_t i = 0; i < graphs.size(); ++i)
            out.push_back({*path + "#" + std::to_string(i), std::move(graphs[i])});
    }
    if (out.empty()) throw ParseError("no input graphs (use --catalog or --graph)", 0);
    return out;
}

inline json input_descriptor(const std::optional<std::string>& catalog_id, const std::optional<std::string>& path) {
    json j = json::object();
    if (catalog_id) j["catalog"] = *catalog_id;
    if (path) j["graph_file"] = *path;
    return j;
}

// ---------------------------------------------------------------- bound

struct BoundOptions {
    std::optional<std::string> catalog_id;
    std::optional<std::string> graph_path;
    std::size_t k = 1;
    std::optional<Polynomial> polynomial;
    ZeroPolicy policy = ZeroPolicy::exact();
    bool poly_grid = false;
    std::size_t oracle_budget = kOracleDefaultBudget;
    bool strict = false;
    std::optional<std::size_t> threads;
};

inline std::string bounds_csv(const std::vector<ChainReport>& chains) {
    std::ostringstream os;
    os << "graph,k,bound,value,floor,ge_w,le_W,exact,tight\n";
    for (const auto& c : chains)
        for (const auto& b : c.bounds) {
            char value[32];
            std::snprintf(value, sizeof value, "%.12g", b.value);
            os << c.graph << ',' << b.k << ',' << b.bound << ',' << value << ',' << b.floor << ',';
            if (b.counts) os << b.counts->ge_w << ',' << b.counts->le_W;
            else os << ',';
            os << ',';
            if (c.exact) os << c.exact->size;
            os << ',';
            if (b.tight) os << (*b.tight ? "true" : "false");
            os << '\n';
        }
    return os.str();
}

inline CommandResult cmd_bound(const BoundOptions& opt) {
    if (opt.k == 0) throw ContractError("k must be >= 1");
    if (opt.polynomial && opt.polynomial->degree() > opt.k)
        throw ContractError("polynomial degree " + std::to_string(opt.polynomial->degree()) + " exceeds k = " +
                            std::to_string(opt.k));
    const auto graphs = load_graphs(opt.catalog_id, opt.graph_path);
    auto chains = parallel_map<ChainReport>(graphs.size(), thread_count(opt.threads), [&](std::size_t i) {
        ChainOptions co;
        co.policy = opt.policy;
        co.polynomial = opt.polynomial;
        co.poly_grid = opt.poly_grid;
        co.oracle_budget = opt.oracle_budget;
        co.graph_id = graphs[i].id;
        return bound_chain(graphs[i].graph, opt.k, co);
    });
    CommandResult res;
    res.report = run_header("bound", input_descriptor(opt.catalog_id, opt.graph_path));
    res.report["k"] = opt.k;
    json results = json::array();
    bool budget_failure = false;
    for (const auto& c : chains) {
        results.push_back(to_json(c));
        budget_failure |= c.budget_error.has_value();
    }
    res.report["results"] = results;
    res.csv = bounds_csv(chains);
    if (opt.strict && budget_failure) res.exit_code = kBudgetError;
    return res;
}

// ---------------------------------------------------------------- exact

struct ExactOptions {
    std::optional<std::string> catalog_id;
    std::optional<std::string> graph_path;
    std::size_t k = 1;
    std::size_t oracle_budget = kOracleDefaultBudget;
    std::optional<std::size_t> threads;
};

inline CommandResult cmd_exact(const ExactOptions& opt) {
    if (opt.k == 0) throw ContractError("k must be >= 1");
    const auto graphs = load_graphs(opt.catalog_id, opt.graph_path);
    auto results = parallel_map<json>(graphs.size(), thread_count(opt.threads), [&](std::size_t i) {
        json j{{"graph", graphs[i].id}, {"n", graphs[i].graph.order()}, {"k", opt.k}};
        try {
            auto r = alpha_k_exact(graphs[i].graph, opt.k, opt.oracle_budget);
            j["alpha_k"] = r.size;
            j["certificate"] = to_json(r.cert);
        } catch (const BudgetError& e) {
            j["alpha_k"] = nullptr;
            j["budget_error"] = e.what();
        }
        return j;
    });
    CommandResult res;
    res.report = run_header("exact", input_descriptor(opt.catalog_id, opt.graph_path));
    res.report["k"] = opt.k;
    res.report["results"] = results;
    for (const auto& r : results)
        if (r.contains("budget_error")) res.exit_code = kBudgetError;
    return res;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    std::optional<std::string> catalog_id;
    std::optional<std::string> graph_path;
    json certificate;
    std::optional<std::size_t> k;  // overrides the certificate's "k"
    double tolerance = kCertificateTolerance;
};

/// Verifies a packing or quantum certificate (detected by the presence of
/// "t") against the first input graph. Malformed certificates raise
/// CertificateError (an input error); well-formed invalid ones exit 1.
inline CommandResult cmd_verify(const VerifyOptions& opt) {
    const auto graphs = load_graphs(opt.catalog_id, opt.graph_path);
    const Graph& g = graphs.front().graph;
    const std::size_t k = opt.k.value_or(certificate_k(opt.certificate));
    CommandResult res;
    res.report = run_header("verify", input_descriptor(opt.catalog_id, opt.graph_path));
    VerificationReport rep;
    if (is_quantum_certificate(opt.certificate)) {
        res.report["certificate_kind"] = "quantum";
        rep = verify_quantum_cert(g, k, quantum_from_json(opt.certificate, g.order()), opt.tolerance);
    } else {
        res.report["certificate_kind"] = "packing";
        rep = verify_packing(g, k, packing_from_json(opt.certificate, g.order()), opt.tolerance);
    }
    res.report["k"] = k;
    res.report["graph"] = graphs.front().id;
    res.report["result"] = to_json(rep);
    res.exit_code = rep.valid ? kOk : kInvalid;
    return res;
}

// ---------------------------------------------------------------- weights

struct WeightsOptions {
    std::optional<std::string> catalog_id;
    std::optional<std::string> graph_path;
    SearchConfig config;
};

inline CommandResult cmd_weights(const WeightsOptions& opt) {
    const auto graphs = load_graphs(opt.catalog_id, opt.graph_path);
    CommandResult res;
    res.report = run_header("weights", input_descriptor(opt.catalog_id, opt.graph_path));
    res.report["config"] = to_json(opt.config);
    json results = json::array();
    for (const auto& ng : graphs) {
        json j = to_json(search_tight_weights(ng.graph, opt.config));
        j["graph"] = ng.id;
        j["unweighted_bound"] = inertia_bound(ng.graph).floor;
        results.push_back(std::move(j));
    }
    res.report["results"] = results;
    return res;
}

// ---------------------------------------------------------------- scan

struct ScanOptions {
    std::size_t n_min = 4;
    std::size_t n_max = 9;
    std::size_t count = 100;
    std::uint64_t seed = 1;
    std::vector<std::size_t> ks{1};
    std::vector<double> edge_probabilities{0.2, 0.5, 0.8};
    std::size_t random_polynomials = 5;
    bool catalog_only = false;
    std::size_t oracle_budget = kOracleDefaultBudget;
    std::optional<std::size_t> threads;
};

/// G(n, p) with n and p drawn from the options; deterministic per (seed, index).
inline Graph scan_graph(const ScanOptions& opt, std::size_t index, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick_n(opt.n_min, opt.n_max);
    const std::size_t n = pick_n(rng);
    const double p = opt.edge_probabilities[index % opt.edge_probabilities.size()];
    std::bernoulli_distribution coin(p);
    return graph_from_predicate(n, [&](Vertex, Vertex) { return coin(rng); });
}

/// Polynomials checked by the scan for a given k: x^k, x^k + x (k >= 2) and
/// `count` random ones of degree <= k with standard normal coefficients.
inline std::vector<Polynomial> scan_polynomials(std::size_t k, std::size_t count, std::mt19937_64& rng) {
    std::vector<Polynomial> out{Polynomial::monomial(k)};
    if (k >= 2) {
        auto c = Polynomial::monomial(k).coefficients();
        c[1] = 1.0;
        out.emplace_back(c);
    } else {
        out.emplace_back(std::vector<double>{0.0, 2.0});
    }
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick_len(2, k + 1);
    while (out.size() < 2 + count) {
        std::vector<double> c(pick_len(rng));
        for (double& x : c) x = normal(rng);
        Polynomial p(c);
        if (!p.is_zero()) out.push_back(p);
    }
    return out;
}

struct ScanInstance {
    json entry;
    std::vector<json> violations;
    std::map<std::string, std::pair<std::size_t, std::size_t>> tight;  // name -> (tight, total)
    std::size_t checks = 0;
    bool budget_failure = false;
};

inline ScanInstance scan_one(const std::string& id, const Graph& g, const ScanOptions& opt, std::uint64_t poly_seed) {
    ScanInstance inst;
    inst.entry = {{"graph", id}, {"graph6", write_graph6(g)}, {"n", g.order()}, {"m", g.size()}};
    json per_k = json::array();
    std::mt19937_64 rng(poly_seed);
    for (std::size_t k : opt.ks) {
        json kj{{"k", k}};
        std::optional<std::size_t> alpha;
        try {
            alpha = alpha_k_exact(g, k, opt.oracle_budget).size;
            kj["alpha_k"] = *alpha;
        } catch (const BudgetError& e) {
            kj["alpha_k"] = nullptr;
            kj["budget_error"] = e.what();
            inst.budget_failure = true;
        }
        std::vector<BoundReport> reports;
        reports.push_back(inertia_bound(power_graph(g, k)));
        for (const auto& p : scan_polynomials(k, opt.random_polynomials, rng)) {
            if (p.degree() > k) continue;
            reports.push_back(poly_spectral_bound(g, p));
        }
        if (k == 1) {
            std::size_t delta = 0;
            if (g.is_regular(&delta) && delta >= 1) reports.push_back(hoffman_bound(g));
            if (g.size() > 0) reports.push_back(vdh_bound(g));
        }
        json bj = json::array();
        for (auto& r : reports) {
            json b{{"bound", r.bound}, {"value", round12(r.value)}};
            if (r.polynomial) b["polynomial"] = to_json(r)["polynomial"];
            if (alpha) {
                ++inst.checks;
                // Counting bounds are integers; real-valued ones get a relative slack.
                const double slack = 1e-9 * std::max(1.0, r.value);
                if (static_cast<double>(*alpha) > r.value + slack)
                    inst.violations.push_back({{"graph", id}, {"graph6", write_graph6(g)}, {"k", k},
                                               {"bound", r.bound}, {"value", round12(r.value)}, {"alpha_k", *alpha},
                                               {"polynomial", b.value("polynomial", json(nullptr))}});
                const bool tight = r.floor == static_cast<long long>(*alpha);
                b["tight"] = tight;
                auto& t = inst.tight[r.bound];
                t.first += tight ? 1 : 0;
                t.second += 1;
            }
            bj.push_back(std::move(b));
        }
        kj["bounds"] = bj;
        per_k.push_back(std::move(kj));
    }
    inst.entry["per_k"] = per_k;
    return inst;
}

inline CommandResult cmd_scan(const ScanOptions& opt) {
    if (opt.ks.empty()) throw ContractError("scan: at least one k is required");
    for (auto k : opt.ks)
        if (k == 0) throw ContractError("scan: k must be >= 1");
    if (opt.n_min < 1 || opt.n_min > opt.n_max) throw ContractError("scan: need 1 <= n_min <= n_max");
    if (opt.edge_probabilities.empty()) throw ContractError("scan: at least one edge probability is required");

    std::vector<NamedGraph> graphs;
    std::vector<std::uint64_t> poly_seeds;
    if (opt.catalog_only) {
        for (const auto& id : default_catalog_ids()) {
            Graph g = catalog(id);
            if (g.order() > opt.oracle_budget) continue;
            graphs.push_back({id, std::move(g)});
            poly_seeds.push_back(opt.seed ^ (0x9e3779b97f4a7c15ULL * (graphs.size())));
        }
    } else {
        for (std::size_t i = 0; i < opt.count; ++i) {
            std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                              static_cast<std::uint32_t>(i)};
            std::mt19937_64 rng(seq);
            graphs.push_back({"random#" + std::to_string(i), scan_graph(opt, i, rng)});
            poly_seeds.push_back(rng());
        }
    }

    auto instances = parallel_map<ScanInstance>(graphs.size(), thread_count(opt.threads), [&](std::size_t i) {
        return scan_one(graphs[i].id, graphs[i].graph, opt, poly_seeds[i]);
    });

    std::size_t checks = 0;
    bool budget_failure = false;
    json violations = json::array();
    json entries = json::array();
    std::map<std::string, std::pair<std::size_t, std::size_t>> tight;
    for (auto& inst : instances) {
        checks += inst.checks;
        budget_failure |= inst.budget_failure;
        for (auto& v : inst.violations) violations.push_back(std::move(v));
        for (const auto& [name, t] : inst.tight) {
            tight[name].first += t.first;
            tight[name].second += t.second;
        }
        entries.push_back(std::move(inst.entry));
    }
    json tj = json::object();
    for (const auto& [name, t] : tight) tj[name] = {{"tight", t.first}, {"total", t.second}};

    CommandResult res;
    json input{{"catalog_only", opt.catalog_only}, {"seed", opt.seed}, {"k", opt.ks}};
    if (!opt.catalog_only) {
        json probs = json::array();
        for (double p : opt.edge_probabilities) probs.push_back(round12(p));
        input["n_min"] = opt.n_min;
        input["n_max"] = opt.n_max;
        input["count"] = opt.count;
        input["edge_probabilities"] = probs;
    }
    input["random_polynomials"] = opt.random_polynomials;
    res.report = run_header("scan", input);
    res.report["summary"] = {{"graphs", graphs.size()}, {"checks", checks}, {"violations", violations.size()},
                             {"tightness", tj}};
    res.report["violations"] = violations;
    res.report["instances"] = entries;
    if (!violations.empty()) res.exit_code = kInvalid;
    else if (budget_failure) res.exit_code = kBudgetError;
    return res;
}

}  // namespace spectral_indep::cli
