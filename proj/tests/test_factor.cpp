#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "corefactor/factor.hpp"
#include "corefactor/gadget.hpp"
#include "corefactor/graph_ops.hpp"
#include "corefactor/matching.hpp"
#include "corefactor/oracles.hpp"
#include "corefactor/random_graph.hpp"
#include "corefactor/rng.hpp"

using namespace corefactor;

namespace {

MultiGraph cycle(std::size_t n) {
    std::vector<Edge> es;
    for (VertexId i = 0; i < n; ++i) es.push_back({i, static_cast<VertexId>((i + 1) % n)});
    return MultiGraph(n, std::move(es));
}

MultiGraph complete(std::size_t n) {
    std::vector<Edge> es;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) es.push_back({u, v});
    return MultiGraph(n, std::move(es));
}

MultiGraph path(std::size_t n) {
    std::vector<Edge> es;
    for (VertexId i = 0; i + 1 < n; ++i) es.push_back({i, static_cast<VertexId>(i + 1)});
    return MultiGraph(n, std::move(es));
}

// Every vertex of `sub` (the edge ids `picked` of g) has degree exactly k.
void check_regular(const MultiGraph& g, const std::vector<EdgeId>& picked, int k) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (EdgeId e : picked) {
        REQUIRE(e < g.edge_count());
        const Edge ed = g.edge(e);
        deg[ed.u]++;
        deg[ed.v]++;  // a self-loop lands here twice
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(deg[v] == k);
}

}  // namespace

TEST_CASE("delta_k parity") {
    CHECK(delta_k(complete(5), 1) == 1);
    CHECK(delta_k(complete(5), 2) == 0);
    CHECK(delta_k(cycle(4), 3) == 0);
    CHECK(delta_k(cycle(4), 1) == 0);
    CHECK(delta_k(MultiGraph(3, {}), 3) == 1);
}

TEST_CASE("gadget shape and recovery") {
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = 4 + static_cast<std::size_t>(i % 8);
        MultiGraph g = gnp_random(n, std::min(3.0, static_cast<double>(n - 1)),
                                  derive_seed(31, 0, i));
        if (g.min_degree() == 0) continue;
        for (int k : {1, 2}) {
            GadgetGraph gg = build_phi(g, k);
            CHECK(gg.host().vertex_count() == k * n + 2 * g.edge_count());
            CHECK(gg.host().edge_count() == (2 * k + 1) * g.edge_count());
            CHECK(phi_recovers_original(gg, g));
        }
    }
    CHECK_THROWS_AS(build_phi(MultiGraph(2, {{0, 0}, {0, 1}, {1, 1}}), 1), std::invalid_argument);
    CHECK_THROWS_AS(build_phi(MultiGraph(3, {{0, 1}}), 1), std::invalid_argument);  // isolated 2
    CHECK_THROWS_AS(build_phi(cycle(4), 0), std::invalid_argument);
}

TEST_CASE("find_k_factor on named graphs") {
    // C4 is its own 2-factor.
    FactorOutcome c4 = find_k_factor(cycle(4), 2);
    REQUIRE(c4.kind == FactorKind::Factor);
    CHECK(c4.edges == std::vector<EdgeId>{0, 1, 2, 3});

    // C4 has a 1-factor: two opposite edges.
    FactorOutcome c4m = find_k_factor(cycle(4), 1);
    REQUIRE(c4m.kind == FactorKind::Factor);
    check_regular(cycle(4), c4m.edges, 1);

    // A triangle is its own 2-factor.
    FactorOutcome tri = find_k_factor(cycle(3), 2);
    REQUIRE(tri.kind == FactorKind::Factor);
    CHECK(tri.edges.size() == 3);

    // K4 is its own 3-factor.
    FactorOutcome k4 = find_k_factor(complete(4), 3);
    REQUIRE(k4.kind == FactorKind::Factor);
    CHECK(k4.edges.size() == 6);

    // The Petersen graph has a 2-factor (two disjoint 5-cycles).
    std::vector<Edge> pes;
    for (VertexId i = 0; i < 5; ++i) {
        pes.push_back({i, static_cast<VertexId>((i + 1) % 5)});
        pes.push_back({static_cast<VertexId>(5 + i), static_cast<VertexId>(5 + (i + 2) % 5)});
        pes.push_back({i, static_cast<VertexId>(5 + i)});
    }
    MultiGraph pet(10, std::move(pes));
    FactorOutcome p2 = find_k_factor(pet, 2);
    REQUIRE(p2.kind == FactorKind::Factor);
    check_regular(pet, p2.edges, 2);

    // A path has no 2-factor; the refusal carries a host certificate.
    FactorOutcome none = find_k_factor(path(4), 2);
    CHECK(none.kind == FactorKind::None);
    CHECK(none.edges.empty());
    GadgetGraph host = build_phi(path(4), 2);
    VertexSet x(none.certificate);
    CHECK(odd_components(host.host(), x) > x.size());

    CHECK_THROWS_AS(find_k_factor(cycle(4), 0), std::invalid_argument);
}

TEST_CASE("find_k_factor delegates odd parity to criticality") {
    // K5 with k = 1: delta = 1, and K5 is 1-factor-critical.
    FactorOutcome r = find_k_factor(complete(5), 1);
    REQUIRE(r.kind == FactorKind::FactorCritical);
    CHECK_FALSE(r.sampled);
    CHECK(r.tested_vertices.size() == 5);
    CHECK(r.per_deleted_vertex.size() == 5);
    for (const auto& [v, edges] : r.per_deleted_vertex) {
        CHECK(edges.size() == 2);  // perfect matching of K4
        for (EdgeId e : edges) {
            const Edge ed = complete(5).edge(e);
            CHECK(ed.u != v);
            CHECK(ed.v != v);
        }
    }

    // C5 with k = 2 and delta = 0: the cycle itself.
    FactorOutcome c5 = find_k_factor(cycle(5), 2);
    CHECK(c5.kind == FactorKind::Factor);

    // P3 with k = 1: delta = 1 but deleting an endpoint strands a vertex.
    FactorOutcome p3 = find_k_factor(path(3), 1);
    CHECK(p3.kind == FactorKind::None);
}

TEST_CASE("find_k_factor agrees with brute force") {
    int checked = 0;
    for (int i = 0; checked < 200; ++i) {
        const std::size_t n = 3 + static_cast<std::size_t>(i % 5);  // 3..7
        const double cmax = static_cast<double>(n - 1);
        MultiGraph g = gnp_random(n, std::min(cmax, 0.7 * static_cast<double>(i % 6)),
                                  derive_seed(32, 0, i));
        if (g.edge_count() > 24 || g.min_degree() == 0) continue;
        const int k = 1 + i % 3;
        auto brute = oracle::k_factor_bruteforce(g, k);
        FactorOutcome fast = find_k_factor(g, k);
        INFO("i = ", i, ", n = ", n, ", k = ", k);
        // With delta = 1 no factor exists and `fast` reports on criticality
        // instead, so compare existence claims only.
        CHECK((fast.kind == FactorKind::Factor) == brute.has_value());
        if (fast.kind == FactorKind::Factor) check_regular(g, fast.edges, k);
        ++checked;
    }
}

TEST_CASE("criticality exact and sampled modes") {
    // C6 is not 2-factor-critical (C6 - v is a path).
    FactorOutcome c6 = is_k_factor_critical(cycle(6), 2, CriticalityMode{});
    CHECK(c6.kind == FactorKind::None);
    CHECK_FALSE(c6.certificate.empty());

    // K5 is 2-factor-critical (K5 - v = K4 contains C4).
    FactorOutcome k5 = is_k_factor_critical(complete(5), 2, CriticalityMode{});
    REQUIRE(k5.kind == FactorKind::FactorCritical);
    CHECK(k5.tested_vertices.size() == 5);

    // Sampled mode: deterministic subset for a fixed seed.
    CriticalityMode sampled{.exact = false, .samples = 3, .seed = 99};
    FactorOutcome a = is_k_factor_critical(complete(7), 2, sampled);
    FactorOutcome b = is_k_factor_critical(complete(7), 2, sampled);
    REQUIRE(a.kind == FactorKind::FactorCritical);
    CHECK(a.sampled);
    CHECK(a.tested_vertices.size() == 3);
    CHECK(a.tested_vertices == b.tested_vertices);
    CHECK(std::is_sorted(a.tested_vertices.begin(), a.tested_vertices.end()));
    CHECK(a.per_deleted_vertex.size() == 3);

    CriticalityMode other{.exact = false, .samples = 3, .seed = 100};
    FactorOutcome c = is_k_factor_critical(complete(12), 2, other);
    CHECK(c.tested_vertices.size() == 3);

    // samples must be in [1, n].
    CriticalityMode too_many{.exact = false, .samples = 8, .seed = 1};
    CHECK_THROWS_AS(is_k_factor_critical(complete(7), 2, too_many), std::invalid_argument);
    CriticalityMode zero{.exact = false, .samples = 0, .seed = 1};
    CHECK_THROWS_AS(is_k_factor_critical(complete(7), 2, zero), std::invalid_argument);
}

TEST_CASE("criticality witnesses avoid the deleted vertex") {
    FactorOutcome r = is_k_factor_critical(complete(7), 2, CriticalityMode{});
    REQUIRE(r.kind == FactorKind::FactorCritical);
    MultiGraph k7 = complete(7);
    for (const auto& [v, edges] : r.per_deleted_vertex) {
        std::vector<int> deg(7, 0);
        for (EdgeId e : edges) {
            const Edge ed = k7.edge(e);
            CHECK(ed.u != v);
            CHECK(ed.v != v);
            deg[ed.u]++;
            deg[ed.v]++;
        }
        for (VertexId w = 0; w < 7; ++w) CHECK(deg[w] == (w == v ? 0 : 2));
    }
}

TEST_CASE("tutte_check agrees with matching") {
    for (int i = 0; i < 120; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 9);  // 2..10
        MultiGraph g = gnp_random(n, std::min(static_cast<double>(n - 1),
                                              0.5 * static_cast<double>(i % 7)),
                                  derive_seed(33, 0, i));
        auto obstruction = tutte_check(g);
        const bool matched = perfect_matching(g).has_value();
        INFO("i = ", i);
        REQUIRE(obstruction.has_value() == !matched);
        if (obstruction) CHECK(odd_components(g, *obstruction) > obstruction->size());
    }
    CHECK_FALSE(tutte_check(cycle(4)).has_value());
    CHECK(tutte_check(cycle(3)).has_value());
    CHECK(tutte_check(cycle(3))->empty());  // X = {} already works for odd n
    CHECK_THROWS_AS(tutte_check(gnp_random(23, 1.0, 1)), std::invalid_argument);
}

TEST_CASE("lemma2_check guards and hand-checked violations") {
    CHECK_THROWS_AS(lemma2_check(MultiGraph(4, {{0, 1}, {2, 3}}), 1), std::invalid_argument);
    CHECK_THROWS_AS(lemma2_check(gnp_random(15, 14.0, 1), 1), std::invalid_argument);
    CHECK_THROWS_AS(lemma2_check(cycle(4), 0), std::invalid_argument);

    // Star K_{1,3}, k = 1: S = {}, T = {center} gives lhs = 3,
    // rhs = 3 components + k|T| = 4: the first violation in scan order.
    MultiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    auto v = lemma2_check(star, 1);
    REQUIRE(v.has_value());
    CHECK(v->s.empty());
    CHECK(v->t == VertexSet{0});
    CHECK(v->lhs == 3);
    CHECK(v->rhs == 4);

    // K4, k = 1: no violation, and indeed K4 has a 1-factor.
    CHECK_FALSE(lemma2_check(complete(4), 1).has_value());

    // K5, k = 2 (delta = 0): no violation; K5 has a 2-factor.
    CHECK_FALSE(lemma2_check(complete(5), 2).has_value());

    // The condition is sufficient, not necessary: C4 has a 2-factor yet
    // T = {v} already violates (lhs = 2 < rhs = 1 + 2).
    auto c4v = lemma2_check(cycle(4), 2);
    REQUIRE(c4v.has_value());
    CHECK(c4v->lhs < c4v->rhs);
}

TEST_CASE("lemma2_check no-violation implies the conclusion (random sample)") {
    int no_violation_seen = 0;
    for (int i = 0; i < 150; ++i) {
        const std::size_t n = 4 + static_cast<std::size_t>(i % 4);  // 4..7
        const double c = std::min(static_cast<double>(n - 1), 2.5 + 0.5 * (i % 5));
        MultiGraph g = gnp_random(n, c, derive_seed(34, 0, i));
        if (components(g, {}).size() != 1) continue;
        const int k = 1 + i % 2;
        if (lemma2_check(g, k).has_value()) continue;
        ++no_violation_seen;
        INFO("i = ", i, ", n = ", n, ", k = ", k);
        if (delta_k(g, k) == 0) {
            CHECK(find_k_factor(g, k).kind == FactorKind::Factor);
        } else {
            CHECK(is_k_factor_critical(g, k, CriticalityMode{}).kind ==
                  FactorKind::FactorCritical);
        }
    }
    CHECK(no_violation_seen > 10);  // non-vacuous
}
