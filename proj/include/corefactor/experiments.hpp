#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "corefactor/factor.hpp"
#include "corefactor/thresholds.hpp"

namespace corefactor {

struct TrialTimings {
    double generate_ms = 0;
    double peel_ms = 0;
    double gadget_ms = 0;
    double match_ms = 0;
};

// One seeded trial: generate G(n, c), peel to the k-core, and (if requested
// and the core is nonempty) attempt a factor_k-regular spanning subgraph of
// the core. Everything except the wall-clock timings is a pure function of
// the inputs; the deterministic JSONL serialization therefore excludes
// `timings` (they go to a separate timings.csv).
struct TrialRecord {
    std::uint64_t seed = 0;
    std::size_t n = 0;
    double c = 0;
    int k = 0;
    int factor_k = 0;  // 0 = factor stage skipped
    std::size_t core_size = 0;
    std::size_t core_edges = 0;
    std::map<int, std::uint64_t> degree_hist;  // core degrees
    std::optional<FactorKind> outcome;         // present iff core nonempty and factor_k > 0
    bool outcome_sampled = false;              // criticality tested in sampled mode
    TrialTimings timings;
};

// factor_k == 0 skips the factor stage. When the parity obstruction is up
// (delta_{factor_k}(core) == 1) criticality is tested in sampled mode with
// r = min(30, core size) vertices seeded from the trial seed.
TrialRecord run_trial(std::size_t n, double c, int k, int factor_k, std::uint64_t seed);

std::string trial_record_json(const TrialRecord& rec);

struct SweepConfig {
    std::size_t n = 0;
    int k = 0;
    int factor_k = 0;
    std::vector<double> grid;  // mean-degree values
    std::size_t trials = 0;    // per grid point
    std::uint64_t base_seed = 0;
    int parallelism = 1;  // 0 = library default thread count
};

struct SweepCell {
    double c = 0;
    std::size_t trials = 0;
    std::size_t core_nonempty = 0;
    std::size_t factor_success = 0;   // outcome Factor or FactorCritical
    double core_freq = 0;             // 0 when trials == 0
    double factor_freq = 0;
    double mean_core_fraction = 0;
    double predicted_core_fraction = 0;  // 0 below threshold or k < 3
    double mean_tv_distance = 0;         // mean over nonempty cores with a prediction
};

struct SweepSummary {
    SweepConfig config;
    std::vector<SweepCell> cells;
    std::vector<TrialRecord> records;  // grid-major, trial-minor order
};

// Runs trials for every (grid point, trial index) pair. Trials execute in an
// OpenMP loop with `parallelism` threads; each trial's seed is derived from
// (base_seed, grid index, trial index), and results land in preallocated
// slots, so output is byte-identical for any thread count.
SweepSummary sweep(const SweepConfig& config);

// Writes config.json, trials.jsonl, summary.csv, timings.csv into out_dir
// (created if missing). trials.jsonl and summary.csv are deterministic;
// timings.csv carries the wall-clock breakdown.
void write_sweep_outputs(const std::string& out_dir, const SweepSummary& summary);

struct BisectTarget {
    enum class Kind { Core, Factor } kind = Kind::Core;
    int factor_k = 0;  // used when kind == Factor
};

struct BisectResult {
    double estimate = 0;  // midpoint of the final bracket
    double c_lo = 0, c_hi = 0;
    double freq_lo = 0, freq_hi = 0;  // empirical frequencies at the initial endpoints
    int probes = 0;                   // grid points evaluated
};

// Locates the c where the event frequency (nonempty k-core, or factor
// success) crosses 1/2, by bisection to bracket width <= 0.01. Checks that
// freq(c_lo) < 1/2 <= freq(c_hi) and throws std::runtime_error otherwise.
BisectResult threshold_bisect(std::size_t n, int k, std::size_t trials, double c_lo,
                              double c_hi, const BisectTarget& target,
                              std::uint64_t base_seed, int parallelism = 1);

// Wilson score interval for a binomial proportion (z = 1.96).
std::pair<double, double> wilson_interval(std::size_t successes, std::size_t trials);

}  // namespace corefactor
