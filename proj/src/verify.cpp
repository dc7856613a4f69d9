#include "corefactor/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "corefactor/factor.hpp"
#include "corefactor/gadget.hpp"
#include "corefactor/graph_ops.hpp"
#include "corefactor/kcore.hpp"
#include "corefactor/matching.hpp"
#include "corefactor/oracles.hpp"
#include "corefactor/random_graph.hpp"
#include "corefactor/rng.hpp"
#include "corefactor/thresholds.hpp"

namespace corefactor {

namespace {

struct Suite {
    std::vector<VerifyCheck> checks;

    void add(const std::string& name, bool passed, const std::string& detail) {
        checks.push_back({name, passed, detail});
    }
};

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

// Mean degree capped at the generator's domain bound for small n.
double cap_c(std::size_t n, double c) {
    return std::min(c, static_cast<double>(n - 1));
}

MultiGraph remove_vertex(const MultiGraph& g, VertexId x) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (e.u == x || e.v == x) continue;
        edges.push_back({e.u > x ? e.u - 1 : e.u, e.v > x ? e.v - 1 : e.v});
    }
    return MultiGraph(g.vertex_count() - 1, std::move(edges));
}

void small_oracles(Suite& suite) {
    // k-core peeling (queue-based and parallel) vs fixed-point rescan.
    {
        std::size_t mismatches = 0, cases = 0;
        for (std::uint64_t i = 0; i < 200; ++i) {
            const std::size_t n = 1 + static_cast<std::size_t>(i % 40);
            const double c = std::min<double>(static_cast<double>(n - 1), 0.2 * (i % 30));
            const MultiGraph g = gnp_random(n, c, derive_seed(11, 0, i));
            const int k = static_cast<int>(i % 6);
            const auto expect = oracle::k_core_naive(g, k);
            ++cases;
            if (k_core(g, k).core_to_orig != expect) ++mismatches;
            if (k_core_parallel(g, k).core_to_orig != expect) ++mismatches;
        }
        suite.add("kcore-vs-naive", mismatches == 0,
                  std::to_string(cases) + " graphs, " + std::to_string(mismatches) +
                      " mismatches");
    }
    // Component counting vs union-find, with random removed sets.
    {
        std::size_t mismatches = 0, cases = 0;
        for (std::uint64_t i = 0; i < 200; ++i) {
            const std::size_t n = 2 + static_cast<std::size_t>(i % 30);
            const MultiGraph g = gnp_random(n, cap_c(n, 0.15 * (i % 25)), derive_seed(12, 0, i));
            Rng rng(derive_seed(12, 1, i));
            std::vector<VertexId> removed;
            for (std::size_t v = 0; v < n; ++v) {
                if (uniform01(rng) < 0.25) removed.push_back(static_cast<VertexId>(v));
            }
            const VertexSet rset(removed);
            ++cases;
            if (components(g, rset).size() != oracle::component_count_unionfind(g, rset)) {
                ++mismatches;
            }
        }
        suite.add("components-vs-unionfind", mismatches == 0,
                  std::to_string(cases) + " cases, " + std::to_string(mismatches) +
                      " mismatches");
    }
    // Blossom matcher existence vs memoized backtracking.
    {
        std::size_t mismatches = 0, cases = 0;
        for (std::uint64_t i = 0; i < 300; ++i) {
            const std::size_t n = 2 + static_cast<std::size_t>(i % 13);
            const MultiGraph g =
                gnp_random(n, std::min<double>(static_cast<double>(n - 1), 0.3 * (i % 14)),
                           derive_seed(13, 0, i));
            ++cases;
            const bool fast = perfect_matching(g).has_value();
            if (fast != oracle::perfect_matching_backtracking(g)) ++mismatches;
        }
        suite.add("matching-vs-backtracking", mismatches == 0,
                  std::to_string(cases) + " graphs, " + std::to_string(mismatches) +
                      " mismatches");
    }
    // Violator certificates from failed matchings really violate the
    // odd-component condition (the matcher also self-checks; this re-derives
    // the count with the union-find oracle).
    {
        std::size_t bad = 0, found = 0;
        for (std::uint64_t i = 0; i < 200; ++i) {
            const std::size_t n = 3 + static_cast<std::size_t>(i % 12);
            const MultiGraph g = gnp_random(n, cap_c(n, 0.25 * (i % 12)), derive_seed(14, 0, i));
            const MatchingResult r = perfect_matching_certified(g);
            if (r.perfect) continue;
            ++found;
            const VertexSet x(r.violator);
            std::size_t odd = 0;
            for (const VertexSet& comp : components(g, x)) {
                if (comp.size() % 2 == 1) ++odd;
            }
            if (odd <= x.size()) ++bad;
        }
        suite.add("matching-violators", bad == 0,
                  std::to_string(found) + " certificates, " + std::to_string(bad) + " invalid");
    }
    // Gadget layout recovers the original graph.
    {
        std::size_t bad = 0, cases = 0;
        for (std::uint64_t i = 0; i < 100; ++i) {
            const std::size_t n = 2 + static_cast<std::size_t>(i % 10);
            MultiGraph g = gnp_random(n, 1.0 + 0.3 * (i % 10), derive_seed(15, 0, i));
            if (g.min_degree() == 0) continue;  // gadget rejects isolated vertices
            ++cases;
            const int k = 1 + static_cast<int>(i % 3);
            if (!phi_recovers_original(build_phi(g, k), g)) ++bad;
        }
        suite.add("gadget-recovers-original", bad == 0,
                  std::to_string(cases) + " gadgets, " + std::to_string(bad) + " broken");
    }
    // find_k_factor vs exhaustive edge-subset enumeration (parity-even cases).
    {
        std::size_t mismatches = 0, cases = 0;
        for (std::uint64_t i = 0; cases < 150 && i < 2000; ++i) {
            const std::size_t n = 3 + static_cast<std::size_t>(i % 5);
            const MultiGraph g =
                gnp_random(n, cap_c(n, 1.0 + 0.35 * (i % 9)), derive_seed(16, 0, i));
            if (g.edge_count() > 24 || g.min_degree() == 0) continue;
            const int k = 1 + static_cast<int>(i % 3);
            if (delta_k(g, k) != 0) continue;
            ++cases;
            const bool fast = find_k_factor(g, k).kind == FactorKind::Factor;
            const bool slow = oracle::k_factor_bruteforce(g, k).has_value();
            if (fast != slow) ++mismatches;
        }
        suite.add("factor-vs-bruteforce", mismatches == 0,
                  std::to_string(cases) + " cases, " + std::to_string(mismatches) +
                      " mismatches");
    }
    // Exact criticality vs per-vertex brute force.
    {
        std::size_t mismatches = 0, cases = 0;
        for (std::uint64_t i = 0; cases < 60 && i < 2000; ++i) {
            const std::size_t n = 3 + static_cast<std::size_t>(i % 4);
            const MultiGraph g =
                gnp_random(n, cap_c(n, 1.2 + 0.4 * (i % 7)), derive_seed(17, 0, i));
            if (g.edge_count() > 24 || g.min_degree() == 0) continue;
            const int k = 1 + static_cast<int>(i % 2);
            ++cases;
            const bool fast =
                is_k_factor_critical(g, k, CriticalityMode{}).kind == FactorKind::FactorCritical;
            bool slow = true;
            for (std::size_t v = 0; v < n && slow; ++v) {
                slow = oracle::k_factor_bruteforce(remove_vertex(g, static_cast<VertexId>(v)), k)
                           .has_value();
            }
            if (fast != slow) ++mismatches;
        }
        suite.add("criticality-vs-bruteforce", mismatches == 0,
                  std::to_string(cases) + " cases, " + std::to_string(mismatches) +
                      " mismatches");
    }
    // Exhaustive odd-component search agrees with the matcher.
    {
        std::size_t mismatches = 0, cases = 0;
        for (std::uint64_t i = 0; i < 150; ++i) {
            const std::size_t n = 2 + static_cast<std::size_t>(i % 9);
            const MultiGraph g = gnp_random(n, cap_c(n, 0.3 * (i % 11)), derive_seed(18, 0, i));
            ++cases;
            const bool obstructed = tutte_check(g).has_value();
            const bool matched = perfect_matching(g).has_value();
            if (obstructed == matched) ++mismatches;
        }
        suite.add("tutte-vs-matching", mismatches == 0,
                  std::to_string(cases) + " graphs, " + std::to_string(mismatches) +
                      " mismatches");
    }
}

void thresholds_suite(Suite& suite) {
    // Spot values of the Poisson tail.
    {
        const double closed3 = 1.0 - 3.0 * std::exp(-2.0);  // P[Po(2) >= 2]
        const bool ok = std::fabs(pi_k(3, 2.0) - closed3) <= 1e-13 && pi_k(1, 7.3) == 1.0 &&
                        pi_k(3, 0.0) == 0.0;
        suite.add("pi-spot-values", ok, "pi_3(2)=" + fmt(pi_k(3, 2.0)));
    }
    // Monotone in k (down) and lambda (up).
    {
        bool ok = true;
        for (int k = 3; k < 8; ++k) ok = ok && pi_k(k + 1, 3.7) <= pi_k(k, 3.7);
        for (double lam = 0.5; lam < 6.0; lam += 0.5) ok = ok && pi_k(4, lam) <= pi_k(4, lam + 0.5);
        suite.add("pi-monotonicity", ok, "k in [3,8], lambda in [0.5,6.5]");
    }
    const int ks[] = {3, 4, 5, 7, 10};
    // Stationarity identity c_k pi_k(lambda_k) = lambda_k.
    {
        double worst = 0;
        for (int k : ks) {
            const ThresholdResult t = compute_ck(k);
            worst = std::max(worst,
                             std::fabs(t.c_k * pi_k(k, t.lambda_k) - t.lambda_k) / t.lambda_k);
        }
        suite.add("identity-c-pi-lambda", worst <= 1e-9, "worst rel " + fmt(worst));
    }
    // Log-form identity c_k = (k-2)! e^lambda lambda^-(k-2).
    {
        double worst = 0;
        for (int k : ks) {
            const ThresholdResult t = compute_ck(k);
            const double log_rhs =
                std::lgamma(k - 1.0) + t.lambda_k - (k - 2.0) * std::log(t.lambda_k);
            worst = std::max(worst, std::fabs(std::log(t.c_k) - log_rhs));
        }
        suite.add("identity-log-factorial", worst <= 1e-6, "worst log-gap " + fmt(worst));
    }
    // Series identity k-1 = sum_{j>=0} lambda^j / ((k+j-1)(k+j-2)...(k)), the
    // j = 0 term being the empty product 1; the partial-sum function of lambda
    // is strictly increasing.
    {
        double worst = 0;
        bool increasing = true;
        const auto series = [](int k, double lam) {
            double term = 1.0, total = 0.0;
            for (int j = 0; j < 400; ++j) {
                total += term;
                term *= lam / (k + j);
                if (term < 1e-18 * total) break;
            }
            return total;
        };
        for (int k : ks) {
            const ThresholdResult t = compute_ck(k);
            worst = std::max(worst, std::fabs(series(k, t.lambda_k) - (k - 1.0)) / (k - 1.0));
            increasing = increasing && series(k, 0.9 * t.lambda_k) < series(k, t.lambda_k) &&
                         series(k, t.lambda_k) < series(k, 1.1 * t.lambda_k);
        }
        suite.add("identity-series", worst <= 1e-6 && increasing,
                  "worst rel " + fmt(worst) + (increasing ? ", increasing" : ", NOT increasing"));
    }
    // mu root: inside (c-2, c) at c = c_k + 1, residual at root, and a second
    // sign change below the returned root.
    {
        bool ok = true;
        std::string detail;
        for (int k : ks) {
            const ThresholdResult t = compute_ck(k);
            const double c = t.c_k + 1.0;
            const CorePrediction pred = mu_kc(k, c);
            const double residual = std::fabs(pred.mu / c - pi_k(k, pred.mu));
            const auto root_fn = [&](double x) { return x / c - pi_k(k, x); };
            const bool second = root_fn(0.05) > 0.0 && root_fn(c - 2.0) < 0.0;
            const bool inside = pred.mu > c - 2.0 && pred.mu < c;
            if (!(inside && residual <= 1e-12 && second)) {
                ok = false;
                detail += " k=" + std::to_string(k);
            }
        }
        suite.add("mu-bracket-and-root", ok, ok ? "k in {3,4,5,7,10}" : "failed:" + detail);
    }
    // Prediction internals: pmf sums back to the core fraction.
    {
        const CorePrediction pred = mu_kc(5, 9.0);
        double total = 0;
        bool nonneg = true;
        for (const auto& [j, p] : pred.degree_pmf) {
            total += p;
            nonneg = nonneg && p >= 0.0;
        }
        const bool ok = nonneg && std::fabs(total - pred.core_fraction) <= 1e-11 &&
                        pred.j_max >= 5;
        suite.add("prediction-pmf-sum", ok,
                  "sum " + fmt(total) + " vs core_fraction " + fmt(pred.core_fraction));
    }
    // Closed-form expansion sanity: c_k > k, relative residual small at k=100
    // (the absolute residual is larger; see the acceptance analysis).
    {
        bool ok = true;
        for (int k : ks) ok = ok && compute_ck(k).c_k > k;
        const double c100 = compute_ck(100).c_k;
        const double residual = std::fabs(c100 - ck_asymptotic(100));
        suite.add("asymptotic-sanity", ok && residual / c100 < 0.02,
                  "residual(100) " + fmt(residual) + " (rel " + fmt(residual / c100) + ")");
    }
}

}  // namespace

std::vector<VerifyCheck> run_verify_suite(const std::string& suite_name) {
    Suite suite;
    if (suite_name == "small-oracles") {
        small_oracles(suite);
    } else if (suite_name == "thresholds") {
        thresholds_suite(suite);
    } else if (suite_name == "all") {
        small_oracles(suite);
        thresholds_suite(suite);
    } else {
        throw std::invalid_argument("run_verify_suite: unknown suite '" + suite_name +
                                    "' (expected small-oracles, thresholds, all)");
    }
    return suite.checks;
}

}  // namespace corefactor
