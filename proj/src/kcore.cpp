#include "corefactor/kcore.hpp"

#include <atomic>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace corefactor {

namespace {

// Induced subgraph on the surviving vertices with compacted ids. `alive` has
// one flag per original vertex; survivors keep their relative order, and
// core edges keep original edge-id order, so the result is canonical.
CoreResult extract_core(const MultiGraph& g, int k, const std::vector<unsigned char>& alive) {
    CoreResult result;
    result.k = k;
    result.orig_to_core.assign(g.vertex_count(), kNoVertex);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (alive[v]) {
            result.orig_to_core[v] = static_cast<VertexId>(result.core_to_orig.size());
            result.core_to_orig.push_back(static_cast<VertexId>(v));
        }
    }
    std::vector<Edge> core_edges;
    for (const Edge& e : g.edges()) {
        if (alive[e.u] && alive[e.v]) {
            core_edges.push_back({result.orig_to_core[e.u], result.orig_to_core[e.v]});
        }
    }
    result.core = MultiGraph(result.core_to_orig.size(), std::move(core_edges));
    return result;
}

}  // namespace

CoreResult k_core(const MultiGraph& g, int k) {
    if (k < 0) throw std::invalid_argument("k_core: k must be >= 0");
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> deg(n);
    std::vector<unsigned char> alive(n, 1);
    std::vector<VertexId> queue;
    queue.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = g.degree(static_cast<VertexId>(v));
        if (deg[v] < static_cast<std::size_t>(k)) {
            alive[v] = 0;
            queue.push_back(static_cast<VertexId>(v));
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId v = queue[head];
        for (auto [w, id] : g.incidences(v)) {
            (void)id;
            if (!alive[w]) continue;
            if (--deg[w] < static_cast<std::size_t>(k)) {
                alive[w] = 0;
                queue.push_back(w);
            }
        }
    }
    return extract_core(g, k, alive);
}

CoreResult k_core_parallel(const MultiGraph& g, int k, int threads) {
    if (k < 0) throw std::invalid_argument("k_core_parallel: k must be >= 0");
    const std::size_t n = g.vertex_count();
#ifdef _OPENMP
    const int team = threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
    const int team = 1;
#endif
    std::vector<std::atomic<long long>> deg(n);
    std::vector<unsigned char> alive(n, 1);
    std::vector<VertexId> frontier, next;
#pragma omp parallel for schedule(static) num_threads(team)
    for (std::ptrdiff_t v = 0; v < static_cast<std::ptrdiff_t>(n); ++v) {
        deg[v].store(static_cast<long long>(g.degree(static_cast<VertexId>(v))),
                     std::memory_order_relaxed);
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (deg[v].load(std::memory_order_relaxed) < k) {
            alive[v] = 0;
            frontier.push_back(static_cast<VertexId>(v));
        }
    }
    // Round-based peeling: all deficient vertices drop together; their
    // neighbors' degrees decay atomically and the next frontier is collected
    // from threshold crossings.
    while (!frontier.empty()) {
        next.clear();
#pragma omp parallel num_threads(team)
        {
            std::vector<VertexId> local;
#pragma omp for schedule(dynamic, 64) nowait
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(frontier.size()); ++i) {
                for (auto [w, id] : g.incidences(frontier[i])) {
                    (void)id;
                    const long long after =
                        deg[w].fetch_sub(1, std::memory_order_relaxed) - 1;
                    // Exactly one decrement crosses the threshold, so w joins
                    // one local frontier exactly once.
                    if (after == k - 1) local.push_back(w);
                }
            }
#pragma omp critical
            next.insert(next.end(), local.begin(), local.end());
        }
        frontier.clear();
        for (VertexId w : next) {
            if (alive[w]) {  // self-loop decrements cannot resurrect removal
                alive[w] = 0;
                frontier.push_back(w);
            }
        }
    }
    return extract_core(g, k, alive);
}

std::map<int, std::uint64_t> degree_histogram(const MultiGraph& g) {
    std::map<int, std::uint64_t> hist;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        ++hist[static_cast<int>(g.degree(static_cast<VertexId>(v)))];
    }
    return hist;
}

}  // namespace corefactor
