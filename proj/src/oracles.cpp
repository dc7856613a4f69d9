#include "corefactor/oracles.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace corefactor::oracle {

std::vector<VertexId> k_core_naive(const MultiGraph& g, int k) {
    if (k < 0) throw std::invalid_argument("k_core_naive: k must be >= 0");
    const std::size_t n = g.vertex_count();
    std::vector<unsigned char> alive(n, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            std::size_t d = 0;
            for (auto [w, e] : g.incidences(static_cast<VertexId>(v))) {
                (void)e;
                if (alive[w]) ++d;
            }
            if (d < static_cast<std::size_t>(k)) {
                alive[v] = 0;
                changed = true;
            }
        }
    }
    std::vector<VertexId> survivors;
    for (std::size_t v = 0; v < n; ++v) {
        if (alive[v]) survivors.push_back(static_cast<VertexId>(v));
    }
    return survivors;
}

std::size_t component_count_unionfind(const MultiGraph& g, const VertexSet& removed) {
    const std::size_t n = g.vertex_count();
    std::vector<VertexId> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](VertexId v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const Edge& e : g.edges()) {
        if (removed.contains(e.u) || removed.contains(e.v)) continue;
        parent[find(e.u)] = find(e.v);
    }
    std::size_t roots = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (!removed.contains(static_cast<VertexId>(v)) && find(static_cast<VertexId>(v)) == v) {
            ++roots;
        }
    }
    return roots;
}

std::optional<std::vector<EdgeId>> k_factor_bruteforce(const MultiGraph& g, int k) {
    if (k < 0) throw std::invalid_argument("k_factor_bruteforce: k must be >= 0");
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    if (m > 24) throw std::invalid_argument("k_factor_bruteforce: guarded to m <= 24");
    const unsigned long long need2 = static_cast<unsigned long long>(k) * n;
    if (need2 % 2 == 1) return std::nullopt;  // parity obstruction
    const std::size_t want_edges = static_cast<std::size_t>(need2 / 2);
    if (want_edges > m) return std::nullopt;

    std::vector<std::size_t> deg(n);
    const std::uint32_t top = m == 0 ? 0 : (1u << m) - 1;
    for (std::uint32_t mask = 0;; ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) == want_edges) {
            std::fill(deg.begin(), deg.end(), 0);
            for (std::uint32_t scan = mask; scan;) {
                const int e = __builtin_ctz(scan);
                scan &= scan - 1;
                deg[g.edges()[e].u] += g.edges()[e].u == g.edges()[e].v ? 2 : 1;
                if (g.edges()[e].u != g.edges()[e].v) deg[g.edges()[e].v] += 1;
            }
            bool ok = true;
            for (std::size_t v = 0; v < n && ok; ++v) ok = deg[v] == static_cast<std::size_t>(k);
            if (ok) {
                std::vector<EdgeId> witness;
                for (std::uint32_t scan = mask; scan;) {
                    witness.push_back(static_cast<EdgeId>(__builtin_ctz(scan)));
                    scan &= scan - 1;
                }
                return witness;
            }
        }
        if (mask == top) break;
    }
    return std::nullopt;
}

namespace {

bool can_match(std::uint32_t unmatched, const std::vector<std::uint32_t>& adj,
               std::unordered_map<std::uint32_t, bool>& memo) {
    if (unmatched == 0) return true;
    const auto it = memo.find(unmatched);
    if (it != memo.end()) return it->second;
    const int v = __builtin_ctz(unmatched);  // lowest free vertex must be matched
    bool ok = false;
    std::uint32_t candidates = adj[v] & unmatched & ~(1u << v);
    while (candidates && !ok) {
        const int w = __builtin_ctz(candidates);
        candidates &= candidates - 1;
        ok = can_match(unmatched & ~(1u << v) & ~(1u << w), adj, memo);
    }
    memo.emplace(unmatched, ok);
    return ok;
}

}  // namespace

bool perfect_matching_backtracking(const MultiGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("perfect_matching_backtracking: guarded to n <= 20");
    if (n % 2 == 1) return false;
    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        if (e.u == e.v) continue;
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    std::unordered_map<std::uint32_t, bool> memo;
    const std::uint32_t all = n == 0 ? 0 : (1u << n) - 1;
    return can_match(all, adj, memo);
}

GridMin min_ck_grid(int k, double hi, double step) {
    if (k < 3 || k > 6) throw std::invalid_argument("min_ck_grid: supports k in [3, 6]");
    if (!(step > 0.0) || !(hi > step)) {
        throw std::invalid_argument("min_ck_grid: requires 0 < step < hi");
    }
    GridMin best;
    best.ck = std::numeric_limits<double>::infinity();
    const double decay = std::exp(-step);
    const std::uint64_t count = static_cast<std::uint64_t>(hi / step);
    double ex = 1.0;  // e^{-x}, refreshed from scratch every 4096 steps
    for (std::uint64_t i = 1; i <= count; ++i) {
        const double x = static_cast<double>(i) * step;
        if ((i & 4095u) == 1u) {
            ex = std::exp(-x);
        } else {
            ex *= decay;
        }
        double term = 1.0;
        double lower = 1.0;  // sum_{j=0}^{k-2} x^j / j!
        for (int j = 1; j <= k - 2; ++j) {
            term *= x / j;
            lower += term;
        }
        const double tail = 1.0 - ex * lower;
        if (tail > 0.0) {
            const double f = x / tail;
            if (f < best.ck) {
                best.ck = f;
                best.lambda = x;
            }
        }
    }
    if (!std::isfinite(best.ck)) {
        throw std::runtime_error("min_ck_grid: no finite minimum on the grid");
    }
    return best;
}

}  // namespace corefactor::oracle
