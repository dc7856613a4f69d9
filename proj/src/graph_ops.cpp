#include "corefactor/graph_ops.hpp"

#include <stdexcept>

namespace corefactor {

std::size_t lambda_st(const MultiGraph& g, const VertexSet& s, const VertexSet& t) {
    std::vector<unsigned char> in_s(g.vertex_count(), 0), in_t(g.vertex_count(), 0);
    for (VertexId v : s) {
        if (v >= g.vertex_count()) throw std::invalid_argument("lambda_st: vertex out of range");
        in_s[v] = 1;
    }
    for (VertexId v : t) {
        if (v >= g.vertex_count()) throw std::invalid_argument("lambda_st: vertex out of range");
        in_t[v] = 1;
    }
    std::size_t count = 0;
    for (const Edge& e : g.edges()) {
        if ((in_s[e.u] && in_t[e.v]) || (in_t[e.u] && in_s[e.v])) ++count;
    }
    return count;
}

std::vector<VertexSet> components(const MultiGraph& g, const VertexSet& removed) {
    const std::size_t n = g.vertex_count();
    std::vector<unsigned char> gone(n, 0);
    for (VertexId v : removed) {
        if (v >= n) throw std::invalid_argument("components: vertex out of range");
        gone[v] = 1;
    }
    std::vector<VertexSet> result;
    std::vector<unsigned char> seen(n, 0);
    std::vector<VertexId> stack, comp;
    for (std::size_t s = 0; s < n; ++s) {
        if (gone[s] || seen[s]) continue;
        comp.clear();
        stack.push_back(static_cast<VertexId>(s));
        seen[s] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (auto [w, id] : g.incidences(v)) {
                (void)id;
                if (!gone[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        result.emplace_back(std::move(comp));
    }
    return result;
}

std::size_t odd_components(const MultiGraph& g, const VertexSet& removed) {
    std::size_t odd = 0;
    for (const VertexSet& comp : components(g, removed)) {
        if (comp.size() % 2 == 1) ++odd;
    }
    return odd;
}

MultiGraph attach_apex(const MultiGraph& g, VertexId v, int multiplicity) {
    if (v >= g.vertex_count()) throw std::invalid_argument("attach_apex: vertex out of range");
    if (multiplicity < 1) throw std::invalid_argument("attach_apex: multiplicity must be >= 1");
    std::vector<Edge> edges = g.edges();
    const VertexId apex = static_cast<VertexId>(g.vertex_count());
    for (int i = 0; i < multiplicity; ++i) edges.push_back({v, apex});
    return MultiGraph(g.vertex_count() + 1, std::move(edges));
}

}  // namespace corefactor
