#include "corefactor/factor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "corefactor/gadget.hpp"
#include "corefactor/graph_ops.hpp"
#include "corefactor/matching.hpp"
#include "corefactor/rng.hpp"

namespace corefactor {

namespace {

// Perfect matching of the gadget host, mapped back to the original edge ids:
// the k-factor is the set of original edges whose layer edge is unmatched
// (matched layer edges are the discarded ones, their slots paired into the
// U blocks instead). Returns nothing when the host has no perfect matching,
// in which case `violator` receives the host-side certificate.
std::optional<std::vector<EdgeId>> factor_via_gadget(const MultiGraph& g, int k,
                                                     std::vector<VertexId>* violator) {
    const GadgetGraph gadget = build_phi(g, k);
    MatchingResult matching = perfect_matching_certified(gadget.host());
    if (!matching.perfect) {
        if (violator) *violator = std::move(matching.violator);
        return std::nullopt;
    }
    std::vector<unsigned char> layer_matched(g.edge_count(), 0);
    for (EdgeId he : matching.edges) {
        if (const auto oe = gadget.original_edge(he)) layer_matched[*oe] = 1;
    }
    std::vector<EdgeId> factor;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!layer_matched[e]) factor.push_back(e);
    }
    return factor;
}

void check_factor_degrees(const MultiGraph& g, const std::vector<EdgeId>& factor, int k,
                          VertexId skipped) {
    std::vector<std::size_t> deg(g.vertex_count(), 0);
    for (EdgeId e : factor) {
        ++deg[g.edges()[e].u];
        ++deg[g.edges()[e].v];
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const std::size_t want = v == skipped ? 0 : static_cast<std::size_t>(k);
        if (deg[v] != want) {
            throw std::logic_error("k-factor extraction produced degree " +
                                   std::to_string(deg[v]) + " at vertex " + std::to_string(v));
        }
    }
}

}  // namespace

int delta_k(const MultiGraph& g, int k) {
    if (k < 0) throw std::invalid_argument("delta_k: k must be >= 0");
    return static_cast<int>((static_cast<unsigned long long>(k) * g.vertex_count()) % 2);
}

FactorOutcome find_k_factor(const MultiGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("find_k_factor: k must be >= 1");
    if (delta_k(g, k) == 1) {
        return is_k_factor_critical(g, k, CriticalityMode{});
    }
    FactorOutcome outcome;
    std::vector<VertexId> violator;
    if (auto factor = factor_via_gadget(g, k, &violator)) {
        check_factor_degrees(g, *factor, k, kNoVertex);
        outcome.kind = FactorKind::Factor;
        outcome.edges = std::move(*factor);
    } else {
        outcome.kind = FactorKind::None;
        outcome.certificate = std::move(violator);
    }
    return outcome;
}

FactorOutcome is_k_factor_critical(const MultiGraph& g, int k, const CriticalityMode& mode) {
    if (k < 1) throw std::invalid_argument("is_k_factor_critical: k must be >= 1");
    const std::size_t n = g.vertex_count();
    std::vector<VertexId> to_test;
    if (mode.exact) {
        to_test.resize(n);
        std::iota(to_test.begin(), to_test.end(), 0);
    } else {
        if (mode.samples == 0 || mode.samples > n) {
            throw std::invalid_argument("is_k_factor_critical: samples must be in [1, n]");
        }
        // Partial Fisher-Yates: the first `samples` slots of a virtual shuffle.
        std::vector<VertexId> pool(n);
        std::iota(pool.begin(), pool.end(), 0);
        Rng rng(mode.seed);
        for (std::size_t i = 0; i < mode.samples; ++i) {
            const std::size_t j = i + uniform_below(rng, n - i);
            std::swap(pool[i], pool[j]);
        }
        to_test.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(mode.samples));
        std::sort(to_test.begin(), to_test.end());
    }

    FactorOutcome outcome;
    outcome.sampled = !mode.exact;
    for (VertexId v : to_test) {
        outcome.tested_vertices.push_back(v);
        // Apex vertex joined to v by k parallel edges: any k-factor of the
        // augmented graph must take all k of them, saturating v, so its
        // restriction to original edge ids is a k-factor of g - v.
        const MultiGraph augmented = attach_apex(g, v, k);
        std::vector<VertexId> violator;
        auto factor = factor_via_gadget(augmented, k, &violator);
        if (!factor) {
            outcome.kind = FactorKind::None;
            outcome.certificate = std::move(violator);
            outcome.per_deleted_vertex.clear();
            return outcome;
        }
        std::vector<EdgeId> witness;
        for (EdgeId e : *factor) {
            if (e < g.edge_count()) witness.push_back(e);
        }
        check_factor_degrees(g, witness, k, v);
        outcome.per_deleted_vertex.emplace(v, std::move(witness));
    }
    outcome.kind = FactorKind::FactorCritical;
    return outcome;
}

std::optional<VertexSet> tutte_check(const MultiGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 22) throw std::invalid_argument("tutte_check: guarded to |V| <= 22");
    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        if (e.u == e.v) continue;  // self-loops never join components
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    const std::uint32_t all = (1u << n) - 1;
    for (std::uint32_t mask = 0; mask <= all; ++mask) {
        std::uint32_t remaining = all & ~mask;
        std::size_t odd = 0;
        while (remaining) {
            // Flood one component by bit expansion.
            std::uint32_t comp = remaining & (~remaining + 1);  // lowest set bit
            for (;;) {
                std::uint32_t grown = comp;
                std::uint32_t scan = comp;
                while (scan) {
                    const int v = __builtin_ctz(scan);
                    scan &= scan - 1;
                    grown |= adj[v] & remaining;
                }
                if (grown == comp) break;
                comp = grown;
            }
            if (__builtin_popcount(comp) % 2 == 1) ++odd;
            remaining &= ~comp;
        }
        if (odd > static_cast<std::size_t>(__builtin_popcount(mask))) {
            std::vector<VertexId> xs;
            for (std::size_t v = 0; v < n; ++v) {
                if (mask & (1u << v)) xs.push_back(static_cast<VertexId>(v));
            }
            return VertexSet(xs);
        }
        if (mask == all) break;  // avoid wrap when n is at the guard limit
    }
    return std::nullopt;
}

std::optional<Lemma2Violation> lemma2_check(const MultiGraph& g, int k) {
    const std::size_t n = g.vertex_count();
    if (n == 0 || n > 14) throw std::invalid_argument("lemma2_check: requires 1 <= |V| <= 14");
    if (k < 1) throw std::invalid_argument("lemma2_check: k must be >= 1");
    if (components(g, VertexSet{}).size() != 1) {
        throw std::invalid_argument("lemma2_check: requires a connected graph");
    }
    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        if (e.u == e.v) continue;
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    const std::uint32_t all = (1u << n) - 1;
    const int delta = delta_k(g, k);

    const auto component_count = [&](std::uint32_t removed) {
        std::uint32_t remaining = all & ~removed;
        std::size_t comps = 0;
        while (remaining) {
            std::uint32_t comp = remaining & (~remaining + 1);
            for (;;) {
                std::uint32_t grown = comp;
                std::uint32_t scan = comp;
                while (scan) {
                    const int v = __builtin_ctz(scan);
                    scan &= scan - 1;
                    grown |= adj[v] & remaining;
                }
                if (grown == comp) break;
                comp = grown;
            }
            ++comps;
            remaining &= ~comp;
        }
        return comps;
    };

    for (std::uint32_t s = 0; s <= all; ++s) {
        const std::uint32_t rest = all & ~s;
        // Enumerate T over subsets of the complement of S (T = 0 included;
        // the S = T = 0 pair is skipped below).
        std::uint32_t t = 0;
        while (true) {
            if ((s | t) != 0) {
                long long lhs = 0;
                for (std::uint32_t scan = t; scan;) {
                    const int v = __builtin_ctz(scan);
                    scan &= scan - 1;
                    lhs += static_cast<long long>(g.degree(static_cast<VertexId>(v)));
                }
                lhs += static_cast<long long>(k) * __builtin_popcount(s);

                long long cross = 0;
                for (const Edge& e : g.edges()) {
                    const bool us = (s >> e.u) & 1u, ut = (t >> e.u) & 1u;
                    const bool vs = (s >> e.v) & 1u, vt = (t >> e.v) & 1u;
                    if ((us && vt) || (ut && vs)) ++cross;
                }
                const long long rhs = static_cast<long long>(component_count(s | t)) +
                                      static_cast<long long>(k) * __builtin_popcount(t) + cross +
                                      delta;
                if (lhs < rhs) {
                    std::vector<VertexId> sv, tv;
                    for (std::size_t v = 0; v < n; ++v) {
                        if ((s >> v) & 1u) sv.push_back(static_cast<VertexId>(v));
                        if ((t >> v) & 1u) tv.push_back(static_cast<VertexId>(v));
                    }
                    return Lemma2Violation{VertexSet(sv), VertexSet(tv), lhs, rhs};
                }
            }
            if (t == rest) break;
            t = (t - rest) & rest;  // next subset of `rest`
        }
    }
    return std::nullopt;
}

}  // namespace corefactor
