#include <doctest.h>

#include <algorithm>
#include <set>

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

// The Petersen graph: outer C5, inner 5-star polygon, spokes.
MultiGraph petersen() {
    std::vector<Edge> es;
    for (VertexId i = 0; i < 5; ++i) {
        es.push_back({i, static_cast<VertexId>((i + 1) % 5)});
        es.push_back({static_cast<VertexId>(5 + i), static_cast<VertexId>(5 + (i + 2) % 5)});
        es.push_back({i, static_cast<VertexId>(5 + i)});
    }
    return MultiGraph(10, std::move(es));
}

// Checks the structural validity of a claimed perfect matching.
void check_perfect(const MultiGraph& g, const MatchingResult& r) {
    REQUIRE(r.perfect);
    REQUIRE(r.edges.size() == g.vertex_count() / 2);
    std::set<VertexId> covered;
    for (EdgeId e : r.edges) {
        REQUIRE(e < g.edge_count());
        const Edge ed = g.edge(e);
        REQUIRE(ed.u != ed.v);
        CHECK(covered.insert(ed.u).second);
        CHECK(covered.insert(ed.v).second);
    }
    CHECK(covered.size() == g.vertex_count());
    CHECK(std::is_sorted(r.edges.begin(), r.edges.end()));
}

// Checks the structural validity of a Tutte violator: more odd components
// than deleted vertices.
void check_violator(const MultiGraph& g, const MatchingResult& r) {
    REQUIRE_FALSE(r.perfect);
    VertexSet x(r.violator);
    CHECK(x.size() == r.violator.size());  // no duplicates
    CHECK(odd_components(g, x) > x.size());
}

}  // namespace

TEST_CASE("matching on small named graphs") {
    check_perfect(cycle(4), perfect_matching_certified(cycle(4)));
    check_perfect(complete(4), perfect_matching_certified(complete(4)));
    check_perfect(complete(6), perfect_matching_certified(complete(6)));
    check_perfect(petersen(), perfect_matching_certified(petersen()));

    // Two triangles bridged by an edge: 0-1-2, 3-4-5, bridge 2-3.
    MultiGraph bowtie(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    check_perfect(bowtie, perfect_matching_certified(bowtie));

    check_violator(cycle(3), perfect_matching_certified(cycle(3)));
    check_violator(cycle(5), perfect_matching_certified(cycle(5)));
    check_violator(complete(5), perfect_matching_certified(complete(5)));

    // Star K_{1,3}: deleting the center leaves 3 odd components.
    MultiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    MatchingResult r = perfect_matching_certified(star);
    check_violator(star, r);
    CHECK(r.violator == std::vector<VertexId>{0});
}

TEST_CASE("matching degenerate inputs") {
    MatchingResult empty = perfect_matching_certified(MultiGraph(0, {}));
    CHECK(empty.perfect);
    CHECK(empty.edges.empty());

    check_violator(MultiGraph(1, {}), perfect_matching_certified(MultiGraph(1, {})));
    check_violator(MultiGraph(2, {}), perfect_matching_certified(MultiGraph(2, {})));

    // A self-loop cannot match its vertex.
    MultiGraph loop(2, {{0, 0}, {0, 1}});
    check_perfect(loop, perfect_matching_certified(loop));
    MultiGraph only_loop(2, {{0, 0}});
    check_violator(only_loop, perfect_matching_certified(only_loop));
}

TEST_CASE("parallel bundles pick the smallest edge id") {
    MultiGraph par(2, {{0, 1}, {0, 1}, {0, 1}});
    MatchingResult r = perfect_matching_certified(par);
    REQUIRE(r.perfect);
    CHECK(r.edges == std::vector<EdgeId>{0});
}

TEST_CASE("matching is deterministic") {
    MultiGraph g = gnp_random(60, 3.0, 77);
    MatchingResult a = perfect_matching_certified(g);
    MatchingResult b = perfect_matching_certified(g);
    CHECK(a.perfect == b.perfect);
    CHECK(a.edges == b.edges);
    CHECK(a.violator == b.violator);
}

TEST_CASE("matching agrees with the backtracking oracle") {
    int checked = 0;
    for (int i = 0; checked < 600; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 13);  // 2..14
        const double cmax = static_cast<double>(n - 1);
        const double c = std::min(cmax, 0.4 * static_cast<double>(i % 11));
        MultiGraph g = gnp_random(n, c, derive_seed(21, 0, i));
        const bool oracle_says = oracle::perfect_matching_backtracking(g);
        MatchingResult r = perfect_matching_certified(g);
        INFO("i = ", i, ", n = ", n, ", c = ", c);
        REQUIRE(r.perfect == oracle_says);
        if (r.perfect)
            check_perfect(g, r);
        else
            check_violator(g, r);
        ++checked;
    }
}

TEST_CASE("matching handles odd-cycle-rich graphs") {
    // Chains of triangles joined at cut vertices (forces blossom handling).
    for (int len = 1; len <= 6; ++len) {
        std::vector<Edge> es;
        // Triangle t occupies vertices 2t, 2t+1, 2t+2.
        for (VertexId t = 0; t < static_cast<VertexId>(len); ++t) {
            es.push_back({static_cast<VertexId>(2 * t), static_cast<VertexId>(2 * t + 1)});
            es.push_back({static_cast<VertexId>(2 * t + 1), static_cast<VertexId>(2 * t + 2)});
            es.push_back({static_cast<VertexId>(2 * t), static_cast<VertexId>(2 * t + 2)});
        }
        MultiGraph g(2 * len + 1, std::move(es));
        const bool oracle_says = oracle::perfect_matching_backtracking(g);
        MatchingResult r = perfect_matching_certified(g);
        CHECK(r.perfect == oracle_says);
        CHECK_FALSE(r.perfect);  // odd vertex count
        check_violator(g, r);
    }
}

TEST_CASE("larger random matchings are structurally valid") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        MultiGraph g = gnp_random(400, 5.0, derive_seed(22, 0, seed));
        MatchingResult r = perfect_matching_certified(g);
        if (r.perfect)
            check_perfect(g, r);
        else
            check_violator(g, r);
    }
}
