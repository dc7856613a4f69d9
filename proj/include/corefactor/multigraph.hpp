#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace corefactor {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct Edge {
    VertexId u;
    VertexId v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph with stable ids: vertices are [0, n), edges are
// indexed by insertion order and may repeat endpoint pairs (parallel edges).
// Self-loops are representable; a self-loop contributes 2 to its endpoint's
// degree. Immutable after construction.
class MultiGraph {
  public:
    MultiGraph() = default;
    MultiGraph(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    Edge edge(EdgeId e) const { return edges_[e]; }

    // (neighbor, edge id) incidences of v, ordered by edge id.
    std::span<const std::pair<VertexId, EdgeId>> incidences(VertexId v) const {
        return {adj_.data() + adj_offsets_[v], adj_.data() + adj_offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return adj_offsets_[v + 1] - adj_offsets_[v]; }

    std::size_t min_degree() const;
    bool has_self_loop() const;
    bool has_parallel_edges() const;

  private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::pair<VertexId, EdgeId>> adj_;
    std::vector<std::size_t> adj_offsets_{0};
};

// Sorted, deduplicated set of vertex ids.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(std::vector<VertexId> ids);
    VertexSet(std::initializer_list<VertexId> ids);

    bool contains(VertexId v) const;
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    const std::vector<VertexId>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

  private:
    std::vector<VertexId> ids_;
};

}  // namespace corefactor
