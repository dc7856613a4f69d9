#pragma once

#include <optional>

#include "corefactor/multigraph.hpp"

namespace corefactor {

struct MatchingResult {
    bool perfect = false;
    // Perfect case: n/2 edge ids, one per matched pair (for a parallel bundle
    // the smallest edge id is the representative).
    std::vector<EdgeId> edges;
    // Imperfect case: a certificate set X with more than |X| odd components
    // in g - X, recovered from the final alternating forest (the inner
    // vertices of the failed search).
    std::vector<VertexId> violator;
};

// Maximum-cardinality matching restricted to the perfect/imperfect question:
// augmenting-path search with blossom contraction tracked by a union-find
// over blossom bases, greedy initial matching, O(V*E) worst case. Parallel
// edges collapse to one candidate arc. Single-threaded. Deterministic.
MatchingResult perfect_matching_certified(const MultiGraph& g);

// Convenience wrapper: the matched edge ids, or nullopt when no perfect
// matching exists.
std::optional<std::vector<EdgeId>> perfect_matching(const MultiGraph& g);

}  // namespace corefactor
