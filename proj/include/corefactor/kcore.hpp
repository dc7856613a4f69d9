#pragma once

#include <map>

#include "corefactor/multigraph.hpp"

namespace corefactor {

// Result of peeling a graph to its k-core: the maximal induced subgraph of
// minimum degree >= k (unique; possibly empty). Vertex ids in `core` are
// compacted to [0, core.vertex_count()); the two maps translate between the
// original graph and the core.
struct CoreResult {
    int k = 0;
    MultiGraph core;
    std::vector<VertexId> orig_to_core;  // kNoVertex where peeled away
    std::vector<VertexId> core_to_orig;  // ascending original ids
};

// Serial reference peeling: queue of deficient vertices, O(n + m).
// Ties are immaterial (the k-core is unique); the scan order is ascending
// vertex id so results are reproducible byte for byte.
CoreResult k_core(const MultiGraph& g, int k);

// OpenMP round-based peeling kernel: each round removes every currently
// deficient vertex in parallel, then recomputes affected degrees. Produces a
// CoreResult identical to k_core (the k-core is unique and the extraction is
// order-canonical). threads == 0 means the OpenMP default.
CoreResult k_core_parallel(const MultiGraph& g, int k, int threads = 0);

// Degree histogram of g: degree -> number of vertices.
std::map<int, std::uint64_t> degree_histogram(const MultiGraph& g);

}  // namespace corefactor
