#pragma once

#include <optional>

#include "corefactor/multigraph.hpp"

namespace corefactor {

// Degree-constraint gadget reducing "G has a k-regular spanning subgraph" to
// "host has a perfect matching". For each original vertex i there is a block
// U_i of k host vertices and a block V_i with one host vertex per incidence
// of i (so |V_i| = d(i)); U_i x V_i is complete bipartite ("block edges"),
// and each original edge e = {u, v} contributes one "layer edge" joining its
// slot in V_u to its slot in V_v. A perfect matching of the host must match
// every U_i fully into V_i, leaving exactly d(i) - k slots to the layer, so
// the original edges whose layer edge is NOT matched form a k-factor.
//
// Host vertex layout: all U-blocks first (U_i at [k*i, k*i + k)), then
// V-blocks in vertex order; host edge layout: all block edges (vertex-major),
// then the m layer edges in original edge-id order.
class GadgetGraph {
  public:
    GadgetGraph(MultiGraph host, int k, std::size_t original_n, std::size_t original_m,
                std::vector<std::size_t> v_offsets, std::vector<VertexId> slot_owner);

    const MultiGraph& host() const { return host_; }
    int k() const { return k_; }
    std::size_t original_n() const { return original_n_; }
    std::size_t original_m() const { return original_m_; }

    std::size_t block_edge_count() const { return host_.edge_count() - original_m_; }
    // Host id of the layer edge encoding original edge e.
    EdgeId layer_edge(EdgeId e) const { return static_cast<EdgeId>(block_edge_count() + e); }
    // Original edge encoded by a host edge, if it is a layer edge.
    std::optional<EdgeId> original_edge(EdgeId host_edge) const;

    bool is_u_vertex(VertexId host_vertex) const {
        return host_vertex < k_ * original_n_;
    }
    // Original vertex whose block (U or V) contains this host vertex.
    VertexId owner(VertexId host_vertex) const;

    VertexId u_block_start(VertexId i) const { return static_cast<VertexId>(k_ * i); }
    VertexId v_block_start(VertexId i) const {
        return static_cast<VertexId>(k_ * original_n_ + v_offsets_[i]);
    }
    std::size_t v_block_size(VertexId i) const { return v_offsets_[i + 1] - v_offsets_[i]; }

  private:
    MultiGraph host_;
    int k_ = 0;
    std::size_t original_n_ = 0;
    std::size_t original_m_ = 0;
    std::vector<std::size_t> v_offsets_;  // per-vertex slot offsets within the V region
    std::vector<VertexId> slot_owner_;    // host vertex -> original vertex
};

// Builds the gadget. Requires k >= 1, no self-loops, and minimum degree >= 1
// (an isolated vertex would make the construction vacuous and the instance
// trivially infeasible for k >= 1); throws std::invalid_argument otherwise.
// Host has k*n + 2m vertices and (2k+1)*m edges.
GadgetGraph build_phi(const MultiGraph& g, int k);

// Test/verification helper: checks that contracting every V-block of the host
// minus U recovers the original multigraph (each layer edge joins slots owned
// by the endpoints of its original edge, bijectively).
bool phi_recovers_original(const GadgetGraph& gadget, const MultiGraph& g);

}  // namespace corefactor
