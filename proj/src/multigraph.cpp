#include "corefactor/multigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace corefactor {

MultiGraph::MultiGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n > static_cast<std::size_t>(kNoVertex)) {
        throw std::invalid_argument("MultiGraph: vertex count exceeds id space");
    }
    for (const Edge& e : edges_) {
        if (e.u >= n_ || e.v >= n_) {
            throw std::invalid_argument("MultiGraph: edge endpoint " +
                                        std::to_string(e.u >= n_ ? e.u : e.v) +
                                        " out of range for n=" + std::to_string(n_));
        }
    }
    // CSR adjacency by counting sort; per-vertex incidences end up ordered by
    // edge id. A self-loop contributes two incidences at its endpoint.
    adj_offsets_.assign(n_ + 1, 0);
    for (const Edge& e : edges_) {
        ++adj_offsets_[e.u + 1];
        ++adj_offsets_[e.v + 1];
    }
    for (std::size_t v = 0; v < n_; ++v) adj_offsets_[v + 1] += adj_offsets_[v];
    adj_.resize(adj_offsets_[n_]);
    std::vector<std::size_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        const Edge& e = edges_[id];
        adj_[cursor[e.u]++] = {e.v, id};
        adj_[cursor[e.v]++] = {e.u, id};
    }
}

std::size_t MultiGraph::min_degree() const {
    std::size_t best = n_ == 0 ? 0 : degree(0);
    for (std::size_t v = 1; v < n_; ++v) best = std::min(best, degree(static_cast<VertexId>(v)));
    return best;
}

bool MultiGraph::has_self_loop() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.u == e.v; });
}

bool MultiGraph::has_parallel_edges() const {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(edges_.size());
    for (const Edge& e : edges_) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end();
}

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet::VertexSet(std::initializer_list<VertexId> ids)
    : VertexSet(std::vector<VertexId>(ids)) {}

bool VertexSet::contains(VertexId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

}  // namespace corefactor
