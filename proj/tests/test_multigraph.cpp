#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "corefactor/edge_list_io.hpp"
#include "corefactor/graph_ops.hpp"
#include "corefactor/multigraph.hpp"

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

}  // namespace

TEST_CASE("multigraph basic structure") {
    MultiGraph empty;
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.edge_count() == 0);

    MultiGraph k5 = complete(5);
    CHECK(k5.vertex_count() == 5);
    CHECK(k5.edge_count() == 10);
    for (VertexId v = 0; v < 5; ++v) CHECK(k5.degree(v) == 4);
    CHECK(k5.min_degree() == 4);
    CHECK_FALSE(k5.has_self_loop());
    CHECK_FALSE(k5.has_parallel_edges());

    // Incidences are ordered by edge id.
    auto inc = k5.incidences(0);
    REQUIRE(inc.size() == 4);
    for (std::size_t i = 1; i < inc.size(); ++i) CHECK(inc[i - 1].second < inc[i].second);
}

TEST_CASE("multigraph self-loops and parallel edges") {
    // 0 --e0-- 1, 0 --e1-- 1 (parallel), self-loop e2 at 2.
    MultiGraph g(3, {{0, 1}, {0, 1}, {2, 2}});
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 2);  // self-loop counts twice
    CHECK(g.has_self_loop());
    CHECK(g.has_parallel_edges());
    CHECK(g.edge(2) == Edge{2, 2});

    auto inc2 = g.incidences(2);
    REQUIRE(inc2.size() == 2);
    CHECK(inc2[0].first == 2);
    CHECK(inc2[1].first == 2);
}

TEST_CASE("multigraph rejects out-of-range endpoints") {
    CHECK_THROWS_AS(MultiGraph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(MultiGraph(0, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("vertex set sorts and deduplicates") {
    VertexSet s({3, 1, 3, 2, 1});
    CHECK(s.size() == 3);
    CHECK(s.ids() == std::vector<VertexId>{1, 2, 3});
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(0));
    CHECK(VertexSet{} == VertexSet(std::vector<VertexId>{}));
}

TEST_CASE("lambda_st counts edges between sets") {
    // C4: 0-1-2-3-0.
    MultiGraph c4 = cycle(4);
    CHECK(lambda_st(c4, VertexSet{0}, VertexSet{2}) == 0);
    CHECK(lambda_st(c4, VertexSet{0, 2}, VertexSet{1, 3}) == 4);
    CHECK(lambda_st(c4, VertexSet{0}, VertexSet{1}) == 1);
    CHECK(lambda_st(c4, VertexSet{0, 1}, VertexSet{0, 1}) == 1);

    // Inside K5, a triangle against itself sees its 3 internal edges.
    MultiGraph k5 = complete(5);
    CHECK(lambda_st(k5, VertexSet{1, 2, 3}, VertexSet{1, 2, 3}) == 3);

    // Parallel edges each count.
    MultiGraph par(2, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(lambda_st(par, VertexSet{0}, VertexSet{1}) == 3);
}

TEST_CASE("components enumerates by smallest vertex") {
    MultiGraph c4 = cycle(4);
    auto whole = components(c4, {});
    REQUIRE(whole.size() == 1);
    CHECK(whole[0] == VertexSet{0, 1, 2, 3});

    auto split = components(c4, VertexSet{0, 2});
    REQUIRE(split.size() == 2);
    CHECK(split[0] == VertexSet{1});
    CHECK(split[1] == VertexSet{3});

    MultiGraph edgeless(5, {});
    CHECK(components(edgeless, {}).size() == 5);
    CHECK(components(edgeless, VertexSet{0, 1, 2, 3, 4}).empty());
}

TEST_CASE("odd_components counts odd-size pieces") {
    MultiGraph k4 = complete(4);
    CHECK(odd_components(k4, VertexSet{0}) == 1);  // K3 left

    // Star with center 0 and leaves 1..3.
    MultiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(odd_components(star, VertexSet{0}) == 3);
    CHECK(odd_components(star, {}) == 0);

    CHECK(odd_components(cycle(6), {}) == 0);
    CHECK(odd_components(cycle(5), {}) == 1);
}

TEST_CASE("attach_apex joins a new vertex with parallel edges") {
    MultiGraph c4 = cycle(4);
    MultiGraph aug = attach_apex(c4, 0, 3);
    CHECK(aug.vertex_count() == 5);
    CHECK(aug.edge_count() == 7);
    CHECK(aug.degree(0) == 5);
    CHECK(aug.degree(4) == 3);
    // Original edges keep their ids; new edges follow.
    for (EdgeId e = 0; e < 4; ++e) CHECK(aug.edge(e) == c4.edge(e));
    for (EdgeId e = 4; e < 7; ++e) {
        CHECK(aug.edge(e).u == 0);
        CHECK(aug.edge(e).v == 4);
    }

    MultiGraph single(1, {});
    MultiGraph k2 = attach_apex(single, 0, 1);
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    CHECK_THROWS_AS(attach_apex(c4, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(attach_apex(c4, 0, 0), std::invalid_argument);
}

TEST_CASE("edge list round-trips exactly") {
    MultiGraph g(5, {{0, 1}, {1, 2}, {1, 2}, {3, 3}, {2, 4}});
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    MultiGraph back = read_edge_list(in);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());

    std::ostringstream out2;
    write_edge_list(out2, back);
    CHECK(out2.str() == out.str());
}

TEST_CASE("edge list parse errors are loud") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_edge_list(in);
    };
    CHECK_THROWS_AS(parse(""), std::invalid_argument);
    CHECK_THROWS_AS(parse("x y\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("2 1\n0 2\n"), std::invalid_argument);  // vertex out of range
    CHECK_THROWS_AS(parse("2 2\n0 1\n"), std::invalid_argument);  // truncated
    CHECK_THROWS_AS(parse("-1 0\n"), std::invalid_argument);
    CHECK(parse("3 1\n0 2\n").edge_count() == 1);
    CHECK(parse("0 0\n").vertex_count() == 0);
}
