#include "corefactor/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "corefactor/edge_list_io.hpp"
#include "corefactor/experiments.hpp"
#include "corefactor/factor.hpp"
#include "corefactor/kcore.hpp"
#include "corefactor/random_graph.hpp"
#include "corefactor/thresholds.hpp"
#include "corefactor/verify.hpp"

namespace corefactor {

namespace {

std::string fmt_double(double x) { return nlohmann::json(x).dump(); }

// COREFACTOR_THREADS, when set to a positive integer, overrides the
// --parallelism flag of the experiment subcommands.
int resolve_threads(int flag_value) {
    if (const char* env = std::getenv("COREFACTOR_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("COREFACTOR_THREADS must be a positive integer, got '" +
                                        std::string(env) + "'");
        }
        throw std::invalid_argument("COREFACTOR_THREADS must be a positive integer, got '" +
                                    std::string(env) + "'");
    }
    return flag_value;
}

MultiGraph load_graph(const std::string& in_path) {
    if (in_path.empty()) return read_edge_list(std::cin);
    return read_edge_list_file(in_path);
}

void store_graph(const MultiGraph& g, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        write_edge_list(out, g);
    } else {
        write_edge_list_file(out_path, g);
    }
}

// "3" or "3..6" -> inclusive [lo, hi].
std::pair<int, int> parse_k_range(const std::string& spec) {
    const auto dots = spec.find("..");
    try {
        if (dots == std::string::npos) {
            const int k = std::stoi(spec);
            return {k, k};
        }
        const int lo = std::stoi(spec.substr(0, dots));
        const int hi = std::stoi(spec.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("empty range");
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid k range '" + spec + "' (expected K or LO..HI)");
    }
}

// "lo:hi:step" -> {lo, lo+step, ..., <= hi (+ tiny slack)}.
std::vector<double> parse_grid(const std::string& spec) {
    double lo = 0, hi = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(spec);
    if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof()) {
        throw std::invalid_argument("invalid grid '" + spec + "' (expected LO:HI:STEP)");
    }
    if (!(step > 0) || hi < lo) {
        throw std::invalid_argument("invalid grid '" + spec + "': need STEP > 0 and HI >= LO");
    }
    std::vector<double> grid;
    const auto count = static_cast<std::size_t>((hi - lo) / step + 1e-9) + 1;
    for (std::size_t i = 0; i < count; ++i) grid.push_back(lo + static_cast<double>(i) * step);
    return grid;
}

nlohmann::ordered_json factor_outcome_json(const FactorOutcome& outcome) {
    nlohmann::ordered_json j;
    switch (outcome.kind) {
        case FactorKind::Factor: j["kind"] = "factor"; break;
        case FactorKind::FactorCritical: j["kind"] = "factor_critical"; break;
        case FactorKind::None: j["kind"] = "none"; break;
    }
    j["edges"] = outcome.edges;
    nlohmann::ordered_json per = nlohmann::ordered_json::object();
    for (const auto& [v, edges] : outcome.per_deleted_vertex) per[std::to_string(v)] = edges;
    j["per_deleted_vertex"] = std::move(per);
    j["certificate"] = outcome.certificate;
    j["sampled"] = outcome.sampled;
    j["tested_vertices"] = outcome.tested_vertices;
    return j;
}

struct GenArgs {
    std::size_t n = 0;
    double c = 0;
    std::uint64_t seed = 0;
    std::string out_path;
};

struct CoreArgs {
    int k = 0;
    std::string in_path, out_path, map_path;
};

struct FactorArgs {
    int k = 0;
    std::string in_path;
    std::string critical;  // "", "exact", or "sampled:R"
    std::uint64_t seed = 0;
};

struct ThresholdsArgs {
    std::string k_spec = "3..6";
    double tol = 1e-10;
};

struct PredictArgs {
    int k = 0;
    double c = 0;
};

struct SweepArgs {
    std::size_t n = 0;
    int k = 0;
    int factor_k = 0;
    std::string grid_spec;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::string out_dir;
    int parallelism = 1;
};

struct BisectArgs {
    std::size_t n = 0;
    int k = 0;
    std::size_t trials = 0;
    double lo = 0, hi = 0;
    std::string target = "core";
    int factor_k = 0;
    std::uint64_t seed = 0;
    int parallelism = 1;
};

struct VerifyArgs {
    std::string suite = "all";
};

int run_gen(const GenArgs& a, std::ostream& out) {
    store_graph(gnp_random(a.n, a.c, a.seed), a.out_path, out);
    return 0;
}

int run_core(const CoreArgs& a, std::ostream& out) {
    const MultiGraph g = load_graph(a.in_path);
    const CoreResult core = k_core(g, a.k);
    store_graph(core.core, a.out_path, out);
    if (!a.map_path.empty()) {
        std::ofstream map_out(a.map_path);
        for (std::size_t i = 0; i < core.core_to_orig.size(); ++i) {
            map_out << i << ' ' << core.core_to_orig[i] << '\n';
        }
        if (!map_out) throw std::runtime_error("cannot write map file " + a.map_path);
    }
    return 0;
}

int run_factor(const FactorArgs& a, std::ostream& out) {
    const MultiGraph g = load_graph(a.in_path);
    FactorOutcome outcome;
    if (a.critical.empty()) {
        outcome = find_k_factor(g, a.k);
    } else if (a.critical == "exact") {
        outcome = is_k_factor_critical(g, a.k, CriticalityMode{});
    } else if (a.critical.rfind("sampled:", 0) == 0) {
        CriticalityMode mode;
        mode.exact = false;
        try {
            mode.samples = std::stoull(a.critical.substr(8));
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid --critical '" + a.critical + "'");
        }
        mode.seed = a.seed;
        outcome = is_k_factor_critical(g, a.k, mode);
    } else {
        throw std::invalid_argument("invalid --critical '" + a.critical +
                                    "' (expected exact or sampled:R)");
    }
    out << factor_outcome_json(outcome).dump() << '\n';
    return 0;
}

int run_thresholds(const ThresholdsArgs& a, std::ostream& out) {
    const auto [k_lo, k_hi] = parse_k_range(a.k_spec);
    if (k_lo < 3) throw std::invalid_argument("thresholds: k must be >= 3");
    out << "k,lambda_k,c_k,ck_asymptotic,residual\n";
    for (int k = k_lo; k <= k_hi; ++k) {
        const ThresholdResult t = compute_ck(k, a.tol);
        out << k << ',' << fmt_double(t.lambda_k) << ',' << fmt_double(t.c_k) << ',';
        if (k >= 7) {
            const double asym = ck_asymptotic(k);
            out << fmt_double(asym) << ',' << fmt_double(std::fabs(t.c_k - asym));
        } else {
            out << ',';  // expansion undefined below k = 7: leave both blank
        }
        out << '\n';
    }
    return 0;
}

int run_predict(const PredictArgs& a, std::ostream& out) {
    const CorePrediction pred = mu_kc(a.k, a.c);
    nlohmann::ordered_json j;
    j["k"] = pred.k;
    j["c"] = pred.c;
    j["mu"] = pred.mu;
    j["core_fraction"] = pred.core_fraction;
    nlohmann::ordered_json pmf = nlohmann::ordered_json::object();
    for (const auto& [deg, p] : pred.degree_pmf) pmf[std::to_string(deg)] = p;
    j["degree_pmf"] = std::move(pmf);
    j["j_max"] = pred.j_max;
    out << j.dump() << '\n';
    return 0;
}

int run_sweep(const SweepArgs& a, std::ostream& out) {
    SweepConfig config;
    config.n = a.n;
    config.k = a.k;
    config.factor_k = a.factor_k;
    config.grid = parse_grid(a.grid_spec);
    config.trials = a.trials;
    config.base_seed = a.seed;
    config.parallelism = resolve_threads(a.parallelism);
    const SweepSummary summary = sweep(config);
    write_sweep_outputs(a.out_dir, summary);
    nlohmann::ordered_json j;
    j["out_dir"] = a.out_dir;
    j["grid_points"] = summary.cells.size();
    j["records"] = summary.records.size();
    out << j.dump() << '\n';
    return 0;
}

int run_bisect(const BisectArgs& a, std::ostream& out) {
    BisectTarget target;
    if (a.target == "core") {
        target.kind = BisectTarget::Kind::Core;
    } else if (a.target == "factor") {
        target.kind = BisectTarget::Kind::Factor;
        target.factor_k = a.factor_k;
    } else {
        throw std::invalid_argument("invalid --target '" + a.target +
                                    "' (expected core or factor)");
    }
    const BisectResult r = threshold_bisect(a.n, a.k, a.trials, a.lo, a.hi, target, a.seed,
                                            resolve_threads(a.parallelism));
    nlohmann::ordered_json j;
    j["estimate"] = r.estimate;
    j["c_lo"] = r.c_lo;
    j["c_hi"] = r.c_hi;
    j["freq_lo"] = r.freq_lo;
    j["freq_hi"] = r.freq_hi;
    j["probes"] = r.probes;
    out << j.dump() << '\n';
    return 0;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
    const std::vector<VerifyCheck> checks = run_verify_suite(a.suite);
    std::size_t failed = 0;
    for (const VerifyCheck& check : checks) {
        if (!check.passed) ++failed;
        out << (check.passed ? "[PASS] " : "[FAIL] ") << check.name << ": " << check.detail
            << '\n';
    }
    out << checks.size() - failed << '/' << checks.size() << " checks passed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"k-core thresholds and k-regular spanning subgraphs of sparse random graphs"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Generate G(n, c/(n-1)) as an edge list");
    gen->add_option("--n", gen_args.n, "Number of vertices")->required();
    gen->add_option("--c", gen_args.c, "Mean degree")->required();
    gen->add_option("--seed", gen_args.seed, "RNG seed");
    gen->add_option("--out", gen_args.out_path, "Output file (default stdout)");

    CoreArgs core_args;
    auto* core = app.add_subcommand("core", "Peel to the k-core");
    core->add_option("--k", core_args.k, "Core order")->required();
    core->add_option("--in", core_args.in_path, "Input edge list (default stdin)");
    core->add_option("--out", core_args.out_path, "Output edge list (default stdout)");
    core->add_option("--map", core_args.map_path, "Write 'core_id original_id' lines here");

    FactorArgs factor_args;
    auto* factor = app.add_subcommand("factor", "Find a k-regular spanning subgraph");
    factor->add_option("--k", factor_args.k, "Factor degree")->required();
    factor->add_option("--in", factor_args.in_path, "Input edge list (default stdin)");
    factor->add_option("--critical", factor_args.critical,
                       "Force criticality test: exact or sampled:R");
    factor->add_option("--seed", factor_args.seed, "Seed for sampled criticality");

    ThresholdsArgs thresholds_args;
    auto* thresholds = app.add_subcommand("thresholds", "Emergence thresholds c_k as CSV");
    thresholds->add_option("--k", thresholds_args.k_spec, "k or inclusive range K_LO..K_HI")
        ->required();
    thresholds->add_option("--tol", thresholds_args.tol, "Bracket width on lambda");

    PredictArgs predict_args;
    auto* predict = app.add_subcommand("predict", "Predicted core structure above threshold");
    predict->add_option("--k", predict_args.k, "Core order")->required();
    predict->add_option("--c", predict_args.c, "Mean degree (> c_k)")->required();

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo sweep over a mean-degree grid");
    sweep_cmd->add_option("--n", sweep_args.n, "Vertices per trial")->required();
    sweep_cmd->add_option("--k", sweep_args.k, "Core order")->required();
    sweep_cmd->add_option("--factor-k", sweep_args.factor_k, "Factor degree (0 = skip)");
    sweep_cmd->add_option("--grid", sweep_args.grid_spec, "Mean-degree grid LO:HI:STEP")
        ->required();
    sweep_cmd->add_option("--trials", sweep_args.trials, "Trials per grid point")->required();
    sweep_cmd->add_option("--seed", sweep_args.seed, "Base seed");
    sweep_cmd->add_option("--out", sweep_args.out_dir, "Output directory")->required();
    sweep_cmd->add_option("--parallelism", sweep_args.parallelism,
                          "Worker threads (0 = hardware default)");

    BisectArgs bisect_args;
    auto* bisect = app.add_subcommand("bisect", "Bisect the 1/2-frequency crossing over c");
    bisect->add_option("--n", bisect_args.n, "Vertices per trial")->required();
    bisect->add_option("--k", bisect_args.k, "Core order")->required();
    bisect->add_option("--trials", bisect_args.trials, "Trials per probe")->required();
    bisect->add_option("--lo", bisect_args.lo, "Lower mean degree")->required();
    bisect->add_option("--hi", bisect_args.hi, "Upper mean degree")->required();
    bisect->add_option("--target", bisect_args.target, "Event: core or factor");
    bisect->add_option("--factor-k", bisect_args.factor_k, "Factor degree for --target factor");
    bisect->add_option("--seed", bisect_args.seed, "Base seed");
    bisect->add_option("--parallelism", bisect_args.parallelism,
                       "Worker threads (0 = hardware default)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run oracle cross-validation suites");
    verify->add_option("--suite", verify_args.suite, "small-oracles, thresholds, or all");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen(gen_args, out);
        if (core->parsed()) return run_core(core_args, out);
        if (factor->parsed()) return run_factor(factor_args, out);
        if (thresholds->parsed()) return run_thresholds(thresholds_args, out);
        if (predict->parsed()) return run_predict(predict_args, out);
        if (sweep_cmd->parsed()) return run_sweep(sweep_args, out);
        if (bisect->parsed()) return run_bisect(bisect_args, out);
        if (verify->parsed()) return run_verify(verify_args, out);
        err << R"({"error":"no subcommand"})" << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << nlohmann::json{{"error", e.what()}}.dump() << '\n';
        return 1;
    }
}

}  // namespace corefactor
