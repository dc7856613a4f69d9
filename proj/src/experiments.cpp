#include "corefactor/experiments.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "corefactor/gadget.hpp"
#include "corefactor/kcore.hpp"
#include "corefactor/matching.hpp"
#include "corefactor/random_graph.hpp"
#include "corefactor/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace corefactor {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int resolve_parallelism(int requested) {
    if (requested > 0) return requested;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::string fmt_double(double x) { return nlohmann::json(x).dump(); }

const char* factor_kind_name(FactorKind kind) {
    switch (kind) {
        case FactorKind::Factor: return "factor";
        case FactorKind::FactorCritical: return "factor_critical";
        case FactorKind::None: return "none";
    }
    throw std::logic_error("factor_kind_name: unknown kind");
}

// Runs `count` trials of `body(index)` on `parallelism` threads, each result
// landing in its own slot; the first captured exception is rethrown after the
// region joins, so worker throws cannot terminate the process.
template <typename Body>
void parallel_trials(std::size_t count, int parallelism, const Body& body) {
    std::string first_error;
    const int threads = resolve_parallelism(parallelism);
    (void)threads;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (first_error.empty()) first_error = e.what();
        }
    }
    if (!first_error.empty()) {
        throw std::runtime_error("trial failed: " + first_error);
    }
}

}  // namespace

TrialRecord run_trial(std::size_t n, double c, int k, int factor_k, std::uint64_t seed) {
    if (factor_k < 0) throw std::invalid_argument("run_trial: factor_k must be >= 0");
    TrialRecord rec;
    rec.seed = seed;
    rec.n = n;
    rec.c = c;
    rec.k = k;
    rec.factor_k = factor_k;

    auto t = Clock::now();
    const MultiGraph g = gnp_random(n, c, seed);
    rec.timings.generate_ms = ms_since(t);

    t = Clock::now();
    const CoreResult core = k_core(g, k);
    rec.timings.peel_ms = ms_since(t);
    rec.core_size = core.core.vertex_count();
    rec.core_edges = core.core.edge_count();
    rec.degree_hist = degree_histogram(core.core);

    if (factor_k > 0 && rec.core_size > 0) {
        if (delta_k(core.core, factor_k) == 0) {
            t = Clock::now();
            const GadgetGraph gadget = build_phi(core.core, factor_k);
            rec.timings.gadget_ms = ms_since(t);
            t = Clock::now();
            const MatchingResult matching = perfect_matching_certified(gadget.host());
            rec.timings.match_ms = ms_since(t);
            rec.outcome = matching.perfect ? FactorKind::Factor : FactorKind::None;
        } else {
            // Parity blocks the factor itself; test criticality on a seeded
            // sample of vertices (stream 1 of the trial seed).
            CriticalityMode mode;
            mode.exact = false;
            mode.samples = std::min<std::size_t>(30, rec.core_size);
            mode.seed = derive_seed(seed, 1, 0);
            t = Clock::now();
            const FactorOutcome outcome = is_k_factor_critical(core.core, factor_k, mode);
            rec.timings.match_ms = ms_since(t);
            rec.outcome = outcome.kind;
            rec.outcome_sampled = outcome.sampled;
        }
    }
    return rec;
}

std::string trial_record_json(const TrialRecord& rec) {
    nlohmann::ordered_json j;
    j["seed"] = rec.seed;
    j["n"] = rec.n;
    j["c"] = rec.c;
    j["k"] = rec.k;
    j["factor_k"] = rec.factor_k;
    j["core_size"] = rec.core_size;
    j["core_edges"] = rec.core_edges;
    nlohmann::ordered_json hist = nlohmann::ordered_json::object();
    for (const auto& [deg, count] : rec.degree_hist) hist[std::to_string(deg)] = count;
    j["degree_hist"] = std::move(hist);
    if (rec.outcome) {
        j["outcome"] = factor_kind_name(*rec.outcome);
    } else {
        j["outcome"] = nullptr;
    }
    j["outcome_sampled"] = rec.outcome_sampled;
    return j.dump();
}

SweepSummary sweep(const SweepConfig& config) {
    if (config.n < 1) throw std::invalid_argument("sweep: n must be >= 1");
    if (config.k < 0 || config.factor_k < 0) {
        throw std::invalid_argument("sweep: k and factor_k must be >= 0");
    }
    if (config.grid.empty()) throw std::invalid_argument("sweep: grid is empty");
    for (double c : config.grid) {
        if (!(c >= 0.0) || c > static_cast<double>(config.n - 1)) {
            throw std::invalid_argument("sweep: grid value " + std::to_string(c) +
                                        " outside [0, n-1]");
        }
    }

    SweepSummary summary;
    summary.config = config;
    summary.records.resize(config.grid.size() * config.trials);
    parallel_trials(summary.records.size(), config.parallelism, [&](std::size_t idx) {
        const std::size_t gi = idx / config.trials;
        const std::size_t ti = idx % config.trials;
        const std::uint64_t seed = derive_seed(config.base_seed, gi, ti);
        summary.records[idx] =
            run_trial(config.n, config.grid[gi], config.k, config.factor_k, seed);
    });

    // Per grid point prediction: defined only above threshold and for k >= 3.
    double c_k = 0;
    bool have_threshold = false;
    if (config.k >= 3) {
        c_k = compute_ck(config.k).c_k;
        have_threshold = true;
    }
    for (std::size_t gi = 0; gi < config.grid.size(); ++gi) {
        SweepCell cell;
        cell.c = config.grid[gi];
        cell.trials = config.trials;
        std::optional<CorePrediction> pred;
        if (have_threshold && cell.c > c_k) {
            // The (c-2, c) bracket can miss the root in a narrow band just
            // above c_k for k >= 6; the cell then keeps the no-prediction
            // sentinel instead of aborting the sweep.
            try {
                pred = mu_kc(config.k, cell.c);
                cell.predicted_core_fraction = pred->core_fraction;
            } catch (const std::runtime_error&) {
            }
        }
        double fraction_sum = 0;
        double tv_sum = 0;
        std::size_t tv_count = 0;
        for (std::size_t ti = 0; ti < config.trials; ++ti) {
            const TrialRecord& rec = summary.records[gi * config.trials + ti];
            if (rec.core_size > 0) {
                ++cell.core_nonempty;
                if (pred) {
                    tv_sum += degree_pmf_distance(*pred, rec.degree_hist, rec.n);
                    ++tv_count;
                }
            }
            if (rec.outcome &&
                (*rec.outcome == FactorKind::Factor || *rec.outcome == FactorKind::FactorCritical)) {
                ++cell.factor_success;
            }
            fraction_sum += static_cast<double>(rec.core_size) / static_cast<double>(rec.n);
        }
        if (config.trials > 0) {
            cell.core_freq =
                static_cast<double>(cell.core_nonempty) / static_cast<double>(config.trials);
            cell.factor_freq =
                static_cast<double>(cell.factor_success) / static_cast<double>(config.trials);
            cell.mean_core_fraction = fraction_sum / static_cast<double>(config.trials);
        }
        if (tv_count > 0) cell.mean_tv_distance = tv_sum / static_cast<double>(tv_count);
        summary.cells.push_back(cell);
    }
    return summary;
}

void write_sweep_outputs(const std::string& out_dir, const SweepSummary& summary) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const fs::path base(out_dir);

    {
        nlohmann::ordered_json j;
        j["n"] = summary.config.n;
        j["k"] = summary.config.k;
        j["factor_k"] = summary.config.factor_k;
        j["grid"] = summary.config.grid;
        j["trials"] = summary.config.trials;
        j["base_seed"] = summary.config.base_seed;
        j["parallelism"] = summary.config.parallelism;
        std::ofstream out(base / "config.json");
        out << j.dump(2) << '\n';
        if (!out) throw std::runtime_error("write_sweep_outputs: cannot write config.json");
    }
    {
        std::ofstream out(base / "trials.jsonl");
        for (const TrialRecord& rec : summary.records) out << trial_record_json(rec) << '\n';
        if (!out) throw std::runtime_error("write_sweep_outputs: cannot write trials.jsonl");
    }
    {
        std::ofstream out(base / "summary.csv");
        out << "c,trials,core_nonempty,factor_success,core_freq,factor_freq,"
               "mean_core_fraction,predicted_core_fraction,mean_tv_distance\n";
        for (const SweepCell& cell : summary.cells) {
            out << fmt_double(cell.c) << ',' << cell.trials << ',' << cell.core_nonempty << ','
                << cell.factor_success << ',' << fmt_double(cell.core_freq) << ','
                << fmt_double(cell.factor_freq) << ',' << fmt_double(cell.mean_core_fraction)
                << ',' << fmt_double(cell.predicted_core_fraction) << ','
                << fmt_double(cell.mean_tv_distance) << '\n';
        }
        if (!out) throw std::runtime_error("write_sweep_outputs: cannot write summary.csv");
    }
    {
        std::ofstream out(base / "timings.csv");
        out << "grid_index,trial_index,seed,generate_ms,peel_ms,gadget_ms,match_ms\n";
        const std::size_t trials = summary.config.trials;
        for (std::size_t idx = 0; idx < summary.records.size(); ++idx) {
            const TrialRecord& rec = summary.records[idx];
            out << (trials ? idx / trials : 0) << ',' << (trials ? idx % trials : 0) << ','
                << rec.seed << ',' << fmt_double(rec.timings.generate_ms) << ','
                << fmt_double(rec.timings.peel_ms) << ',' << fmt_double(rec.timings.gadget_ms)
                << ',' << fmt_double(rec.timings.match_ms) << '\n';
        }
        if (!out) throw std::runtime_error("write_sweep_outputs: cannot write timings.csv");
    }
}

BisectResult threshold_bisect(std::size_t n, int k, std::size_t trials, double c_lo, double c_hi,
                              const BisectTarget& target, std::uint64_t base_seed,
                              int parallelism) {
    if (trials < 1) throw std::invalid_argument("threshold_bisect: trials must be >= 1");
    if (!(c_lo < c_hi)) throw std::invalid_argument("threshold_bisect: requires c_lo < c_hi");
    const int factor_k = target.kind == BisectTarget::Kind::Factor ? target.factor_k : 0;
    if (target.kind == BisectTarget::Kind::Factor && factor_k < 1) {
        throw std::invalid_argument("threshold_bisect: factor target needs factor_k >= 1");
    }

    int probes = 0;
    const auto freq_at = [&](double c) {
        const std::size_t probe_index = static_cast<std::size_t>(probes++);
        std::vector<unsigned char> hit(trials, 0);
        parallel_trials(trials, parallelism, [&](std::size_t ti) {
            const std::uint64_t seed = derive_seed(base_seed, probe_index, ti);
            const TrialRecord rec = run_trial(n, c, k, factor_k, seed);
            const bool success =
                target.kind == BisectTarget::Kind::Core
                    ? rec.core_size > 0
                    : rec.outcome && (*rec.outcome == FactorKind::Factor ||
                                      *rec.outcome == FactorKind::FactorCritical);
            hit[ti] = success ? 1 : 0;
        });
        std::size_t successes = 0;
        for (unsigned char h : hit) successes += h;
        return static_cast<double>(successes) / static_cast<double>(trials);
    };

    BisectResult result;
    result.freq_lo = freq_at(c_lo);
    result.freq_hi = freq_at(c_hi);
    if (!(result.freq_lo < 0.5 && result.freq_hi >= 0.5)) {
        throw std::runtime_error(
            "threshold_bisect: precondition freq(c_lo) < 1/2 <= freq(c_hi) violated (" +
            std::to_string(result.freq_lo) + ", " + std::to_string(result.freq_hi) + ")");
    }
    double lo = c_lo;
    double hi = c_hi;
    while (hi - lo > 0.01) {
        const double mid = 0.5 * (lo + hi);
        (freq_at(mid) >= 0.5 ? hi : lo) = mid;
    }
    result.c_lo = lo;
    result.c_hi = hi;
    result.estimate = 0.5 * (lo + hi);
    result.probes = probes;
    return result;
}

std::pair<double, double> wilson_interval(std::size_t successes, std::size_t trials) {
    if (trials == 0) return {0.0, 1.0};
    if (successes > trials) {
        throw std::invalid_argument("wilson_interval: successes > trials");
    }
    constexpr double z = 1.96;
    const double t = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / t;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / t;
    const double center = (p + z2 / (2.0 * t)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / t + z2 / (4.0 * t * t)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

}  // namespace corefactor
