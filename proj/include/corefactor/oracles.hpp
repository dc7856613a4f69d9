#pragma once

#include <cstdint>
#include <optional>

#include "corefactor/multigraph.hpp"

// Independent reference implementations used to cross-check the fast paths.
// Deliberately naive: different algorithms, no shared code with the
// implementations they validate.
namespace corefactor::oracle {

// Fixed-point peeling: repeatedly rescan and delete any vertex of degree < k
// until stable. O(n^2 + nm); returns surviving original vertex ids, sorted.
std::vector<VertexId> k_core_naive(const MultiGraph& g, int k);

// Component count of g - removed via union-find over the edge list.
std::size_t component_count_unionfind(const MultiGraph& g, const VertexSet& removed);

// Exhaustive edge-subset enumeration for a spanning k-regular sub-multigraph.
// Requires m <= 24. Returns a witness subset (as edge ids) or nullopt.
std::optional<std::vector<EdgeId>> k_factor_bruteforce(const MultiGraph& g, int k);

// Perfect-matching existence by backtracking on the lowest free vertex.
// Requires n <= 20.
bool perfect_matching_backtracking(const MultiGraph& g);

// Dense grid scan of f(x) = x / tail_k(x) over x in (0, hi] at the given
// step, with the Poisson tail computed from the closed-form partial sum
// (independent of the production tail evaluation). Supports k in [3, 6].
// Returns (argmin, min).
struct GridMin {
    double lambda = 0;
    double ck = 0;
};
GridMin min_ck_grid(int k, double hi, double step);

}  // namespace corefactor::oracle
