// spectral-indep: spectral bounds on (quantum) k-independence numbers.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spectral_indep/cli.hpp"

namespace si = spectral_indep;
namespace cli = spectral_indep::cli;

namespace {

struct Common {
    std::string catalog_id;
    std::string graph_path;
    std::string format = "json";
    std::size_t threads = 0;
    bool timing = false;

    std::optional<std::string> catalog() const { return catalog_id.empty() ? std::nullopt : std::optional(catalog_id); }
    std::optional<std::string> graph() const { return graph_path.empty() ? std::nullopt : std::optional(graph_path); }
    std::optional<std::size_t> thread_request() const {
        return threads ? std::optional<std::size_t>(threads) : std::nullopt;
    }
};

void add_inputs(CLI::App* sub, Common& c) {
    sub->add_option("--catalog", c.catalog_id, "catalog id, e.g. petersen, cycle:5, complete_bipartite:3,3");
    sub->add_option("--graph6,--graph", c.graph_path, "file of graph6 lines or JSON edge lists ('-' for stdin)");
    sub->add_option("--threads", c.threads, "worker threads (default: SPECTRAL_INDEP_THREADS or 1)");
    sub->add_flag("--timing", c.timing, "add wall-clock timing to the report (breaks byte-identical output)");
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(item, &used);
        if (used != item.size()) throw si::ParseError("bad integer list '" + text + "'", 0);
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

si::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw si::ParseError("cannot open '" + path + "'", 0);
    try {
        return si::json::parse(in);
    } catch (const si::json::parse_error& e) {
        throw si::ParseError("'" + path + "' is not valid JSON: " + e.what(), e.byte);
    }
}

si::Field parse_field(const std::string& f) {
    if (f == "real") return si::Field::real_symmetric;
    if (f == "hermitian") return si::Field::hermitian;
    throw si::ParseError("field must be 'real' or 'hermitian'", 0);
}

int emit(cli::CommandResult res, const Common& c, std::chrono::steady_clock::time_point start) {
    if (c.timing)
        res.report["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (c.format == "csv" && !res.csv.empty())
        std::cout << res.csv;
    else
        std::cout << res.report.dump(2) << '\n';
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral upper bounds on classical and quantum k-independence numbers"};
    app.set_version_flag("--version", std::string(cli::kToolVersion));
    app.require_subcommand(1);

    Common common;

    // bound
    auto* bound = app.add_subcommand("bound", "compute every applicable spectral bound");
    add_inputs(bound, common);
    std::size_t bound_k = 1;
    std::string poly_spec, policy = "exact";
    double epsilon = 1e-9;
    bool poly_grid = false, strict = false;
    std::size_t budget = si::kOracleDefaultBudget;
    bound->add_option("-k", bound_k, "distance parameter k >= 1");
    bound->add_option("--poly", poly_spec, "ascending coefficients c0,c1,...,ck (default x^k)");
    bound->add_option("--policy", policy, "inertia zero policy: exact | tolerance")
        ->check(CLI::IsMember({"exact", "tolerance"}));
    bound->add_option("--epsilon", epsilon, "relative zero threshold");
    bound->add_flag("--poly-grid", poly_grid, "also search p(x) = x^k + c x, c in -3..3");
    bound->add_option("--budget", budget, "exact oracle vertex budget");
    bound->add_flag("--strict", strict, "nonzero exit when any graph exceeds the oracle budget");
    bound->add_option("--format", common.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    // exact
    auto* exact = app.add_subcommand("exact", "exact alpha_k by branch-and-bound");
    add_inputs(exact, common);
    std::size_t exact_k = 1;
    exact->add_option("-k", exact_k, "distance parameter k >= 1");
    exact->add_option("--budget", budget, "exact oracle vertex budget");

    // verify
    auto* verify = app.add_subcommand("verify", "verify a packing or quantum certificate");
    add_inputs(verify, common);
    std::string cert_path;
    std::size_t verify_k = 0;
    double tol = si::kCertificateTolerance;
    verify->add_option("--cert", cert_path, "certificate JSON file")->required();
    verify->add_option("-k", verify_k, "override the certificate's k");
    verify->add_option("--tol", tol, "verification tolerance");

    // weights
    auto* weights = app.add_subcommand("weights", "search Hermitian weightings for a tight inertia bound");
    add_inputs(weights, common);
    si::SearchConfig cfg;
    std::string field = "real", config_path;
    weights->add_option("--config", config_path, "JSON search config (flags given explicitly override it)");
    auto* o_restarts = weights->add_option("--restarts", cfg.restarts, "random restarts");
    auto* o_iters = weights->add_option("--iterations", cfg.iterations, "hill-climbing steps per restart");
    auto* o_seed = weights->add_option("--seed", cfg.seed, "random seed");
    auto* o_field = weights->add_option("--field", field, "real | hermitian")->check(CLI::IsMember({"real", "hermitian"}));
    auto* o_step = weights->add_option("--step", cfg.initial_step, "initial perturbation scale");
    auto* o_decay = weights->add_option("--decay", cfg.step_decay, "per-step scale decay");
    auto* o_grid = weights->add_option("--grid", cfg.grid_denominator, "rational grid denominator for exact checks");

    // scan
    auto* scan = app.add_subcommand("scan", "check every bound against the exact oracle on random graphs");
    add_inputs(scan, common);
    std::string scan_n = "4-9", scan_k = "1", scan_p = "0.2,0.5,0.8";
    cli::ScanOptions so;
    scan->add_option("--n", scan_n, "vertex count N or range A-B");
    scan->add_option("--count", so.count, "number of random graphs");
    scan->add_option("--seed", so.seed, "random seed");
    scan->add_option("--k", scan_k, "comma-separated k values");
    scan->add_option("--p", scan_p, "comma-separated edge probabilities (cycled over graphs)");
    scan->add_option("--random-polys", so.random_polynomials, "random polynomials per (graph, k)");
    scan->add_flag("--catalog-only", so.catalog_only, "scan the built-in named graphs instead");
    scan->add_option("--budget", so.oracle_budget, "exact oracle vertex budget");

    CLI11_PARSE(app, argc, argv);

    const auto start = std::chrono::steady_clock::now();
    try {
        if (*bound) {
            cli::BoundOptions o;
            o.catalog_id = common.catalog();
            o.graph_path = common.graph();
            o.k = bound_k;
            if (!poly_spec.empty()) o.polynomial = si::Polynomial::parse(poly_spec);
            o.policy = policy == "exact" ? si::ZeroPolicy{si::ZeroMode::exact, epsilon} : si::ZeroPolicy::tolerance(epsilon);
            o.poly_grid = poly_grid;
            o.oracle_budget = budget;
            o.strict = strict;
            o.threads = common.thread_request();
            return emit(cli::cmd_bound(o), common, start);
        }
        if (*exact) {
            cli::ExactOptions o;
            o.catalog_id = common.catalog();
            o.graph_path = common.graph();
            o.k = exact_k;
            o.oracle_budget = budget;
            o.threads = common.thread_request();
            return emit(cli::cmd_exact(o), common, start);
        }
        if (*verify) {
            cli::VerifyOptions o;
            o.catalog_id = common.catalog();
            o.graph_path = common.graph();
            o.certificate = read_json_file(cert_path);
            if (verify_k) o.k = verify_k;
            o.tolerance = tol;
            return emit(cli::cmd_verify(o), common, start);
        }
        if (*weights) {
            cli::WeightsOptions o;
            o.catalog_id = common.catalog();
            o.graph_path = common.graph();
            si::SearchConfig flags = cfg;
            if (!config_path.empty()) {
                cfg = si::search_config_from_json(read_json_file(config_path));
                if (*o_restarts) cfg.restarts = flags.restarts;
                if (*o_iters) cfg.iterations = flags.iterations;
                if (*o_seed) cfg.seed = flags.seed;
                if (*o_step) cfg.initial_step = flags.initial_step;
                if (*o_decay) cfg.step_decay = flags.step_decay;
                if (*o_grid) cfg.grid_denominator = flags.grid_denominator;
            }
            if (config_path.empty() || *o_field) cfg.field = parse_field(field);
            cfg.threads = cli::thread_count(common.thread_request());
            o.config = cfg;
            return emit(cli::cmd_weights(o), common, start);
        }
        if (*scan) {
            auto dash = scan_n.find('-');
            if (dash == std::string::npos) {
                so.n_min = so.n_max = std::stoull(scan_n);
            } else {
                so.n_min = std::stoull(scan_n.substr(0, dash));
                so.n_max = std::stoull(scan_n.substr(dash + 1));
            }
            so.ks = parse_size_list(scan_k);
            so.edge_probabilities = parse_double_list(scan_p);
            so.threads = common.thread_request();
            return emit(cli::cmd_scan(so), common, start);
        }
    } catch (const si::BudgetError& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return cli::kBudgetError;
    } catch (const si::Error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return cli::kInputError;
    } catch (const si::json::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return cli::kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return cli::kInputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return cli::kInputError;
    }
    return cli::kInputError;
}
