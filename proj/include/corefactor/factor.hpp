#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "corefactor/multigraph.hpp"

namespace corefactor {

// Parity obstruction: delta_k(g) = k * |V(g)| mod 2. A k-factor needs an even
// degree sum k*n, so delta = 1 rules the factor itself out and the natural
// target becomes k-factor-criticality (every G - v has a k-factor).
int delta_k(const MultiGraph& g, int k);

enum class FactorKind { Factor, FactorCritical, None };

struct FactorOutcome {
    FactorKind kind = FactorKind::None;
    // Factor: edge ids of g forming a spanning k-regular sub-multigraph.
    std::vector<EdgeId> edges;
    // FactorCritical: tested vertex -> edge ids of a k-factor of g - vertex.
    std::map<VertexId, std::vector<EdgeId>> per_deleted_vertex;
    // None: certificate set X in the host gadget whose removal leaves more
    // than |X| odd components (host vertex ids of the gadget that failed).
    std::vector<VertexId> certificate;
    // Criticality bookkeeping: exact mode tests every vertex; sampled mode is
    // statistical evidence only and is flagged here.
    bool sampled = false;
    std::vector<VertexId> tested_vertices;
};

// k-regular spanning subgraph search, k >= 1. delta = 0: builds the gadget,
// runs perfect matching, and maps the unmatched layer edges back to a factor.
// delta = 1: delegates to exact criticality. Propagates gadget construction
// errors (self-loops, isolated vertices).
FactorOutcome find_k_factor(const MultiGraph& g, int k);

struct CriticalityMode {
    bool exact = true;
    std::size_t samples = 0;     // sampled mode: number of vertices to test
    std::uint64_t seed = 0;      // sampled mode: selection seed
};

// Tests whether g - v has a k-factor for every tested v (all vertices in
// exact mode; `samples` distinct seeded vertices otherwise, requires
// samples <= n). Each test attaches an apex vertex joined to v by k parallel
// edges and searches a k-factor of the augmented graph; stripping the apex
// yields the k-factor of g - v. Returns FactorCritical with one witness per
// tested vertex, or None with the failing gadget's certificate.
FactorOutcome is_k_factor_critical(const MultiGraph& g, int k, const CriticalityMode& mode);

// Exhaustive check of the classical perfect-matching obstruction: searches
// for X subseteq V with more odd components in g - X than |X|. Guarded to
// |V| <= 22. Returns the first violator in mask order, or nullopt (which by
// the matching theorem means a perfect matching exists).
std::optional<VertexSet> tutte_check(const MultiGraph& g);

struct Lemma2Violation {
    VertexSet s;
    VertexSet t;
    long long lhs = 0;  // sum_{v in T} d(v) + k|S|
    long long rhs = 0;  // omega(g - (S u T)) + k|T| + lambda(S,T) + delta_k(g)
};

// Exhaustive sufficiency condition for k-factors: verifies
//   sum_{v in T} d(v) + k|S| >= omega(g - (S u T)) + k|T| + lambda(S,T) + delta_k(g)
// for every pair of disjoint S, T with S u T nonempty. If no violation exists
// the graph has a k-factor (delta = 0) or is k-factor-critical (delta = 1).
// Requires g connected and |V| <= 14 (3^n enumeration); returns the first
// violation (S ascending by mask, then T) or nullopt.
std::optional<Lemma2Violation> lemma2_check(const MultiGraph& g, int k);

}  // namespace corefactor
