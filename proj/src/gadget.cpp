#include "corefactor/gadget.hpp"

#include <stdexcept>
#include <string>

namespace corefactor {

GadgetGraph::GadgetGraph(MultiGraph host, int k, std::size_t original_n, std::size_t original_m,
                         std::vector<std::size_t> v_offsets, std::vector<VertexId> slot_owner)
    : host_(std::move(host)),
      k_(k),
      original_n_(original_n),
      original_m_(original_m),
      v_offsets_(std::move(v_offsets)),
      slot_owner_(std::move(slot_owner)) {
    if (k_ < 1) throw std::logic_error("GadgetGraph: k must be >= 1");
    if (v_offsets_.size() != original_n_ + 1 ||
        host_.vertex_count() != k_ * original_n_ + 2 * original_m_ ||
        host_.edge_count() != (2 * static_cast<std::size_t>(k_) + 1) * original_m_ ||
        slot_owner_.size() != host_.vertex_count()) {
        throw std::logic_error("GadgetGraph: inconsistent layout");
    }
}

std::optional<EdgeId> GadgetGraph::original_edge(EdgeId host_edge) const {
    if (host_edge >= host_.edge_count()) {
        throw std::invalid_argument("GadgetGraph::original_edge: edge id out of range");
    }
    const std::size_t blocks = block_edge_count();
    if (host_edge < blocks) return std::nullopt;
    return static_cast<EdgeId>(host_edge - blocks);
}

VertexId GadgetGraph::owner(VertexId host_vertex) const {
    if (host_vertex >= host_.vertex_count()) {
        throw std::invalid_argument("GadgetGraph::owner: vertex id out of range");
    }
    return slot_owner_[host_vertex];
}

GadgetGraph build_phi(const MultiGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("build_phi: k must be >= 1");
    if (g.has_self_loop()) throw std::invalid_argument("build_phi: self-loops are not supported");
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    for (std::size_t v = 0; v < n; ++v) {
        if (g.degree(static_cast<VertexId>(v)) == 0) {
            throw std::invalid_argument("build_phi: isolated vertex " + std::to_string(v));
        }
    }

    std::vector<std::size_t> v_offsets(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        v_offsets[i + 1] = v_offsets[i] + g.degree(static_cast<VertexId>(i));
    }
    const std::size_t v_region = static_cast<std::size_t>(k) * n;  // first V host id
    const std::size_t host_n = v_region + 2 * m;

    std::vector<Edge> edges;
    edges.reserve((2 * static_cast<std::size_t>(k) + 1) * m);
    // Block edges, vertex-major: U_i x V_i complete bipartite.
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t u0 = static_cast<std::size_t>(k) * i;
        const std::size_t v0 = v_region + v_offsets[i];
        const std::size_t d = g.degree(static_cast<VertexId>(i));
        for (std::size_t a = 0; a < static_cast<std::size_t>(k); ++a) {
            for (std::size_t b = 0; b < d; ++b) {
                edges.push_back({static_cast<VertexId>(u0 + a), static_cast<VertexId>(v0 + b)});
            }
        }
    }
    // Layer edges in original edge-id order; walking edges by id hands each
    // endpoint its incidences in id order, so slots are assigned canonically.
    std::vector<std::size_t> cursor(n, 0);
    for (const Edge& e : g.edges()) {
        const std::size_t su = v_region + v_offsets[e.u] + cursor[e.u]++;
        const std::size_t sv = v_region + v_offsets[e.v] + cursor[e.v]++;
        edges.push_back({static_cast<VertexId>(su), static_cast<VertexId>(sv)});
    }

    std::vector<VertexId> slot_owner(host_n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < static_cast<std::size_t>(k); ++a) {
            slot_owner[static_cast<std::size_t>(k) * i + a] = static_cast<VertexId>(i);
        }
        for (std::size_t b = v_offsets[i]; b < v_offsets[i + 1]; ++b) {
            slot_owner[v_region + b] = static_cast<VertexId>(i);
        }
    }

    return GadgetGraph(MultiGraph(host_n, std::move(edges)), k, n, m, std::move(v_offsets),
                       std::move(slot_owner));
}

bool phi_recovers_original(const GadgetGraph& gadget, const MultiGraph& g) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    const MultiGraph& host = gadget.host();
    if (gadget.original_n() != n || gadget.original_m() != m) return false;
    const std::size_t k = static_cast<std::size_t>(gadget.k());
    if (host.vertex_count() != k * n + 2 * m) return false;
    if (host.edge_count() != (2 * k + 1) * m) return false;

    // Every block edge joins a U slot to a V slot of the same owner.
    const std::size_t blocks = gadget.block_edge_count();
    for (EdgeId he = 0; he < blocks; ++he) {
        const Edge& e = host.edges()[he];
        const bool u_side_u = gadget.is_u_vertex(e.u);
        const bool v_side_u = gadget.is_u_vertex(e.v);
        if (u_side_u == v_side_u) return false;
        if (gadget.owner(e.u) != gadget.owner(e.v)) return false;
    }

    // Layer edge owners reproduce the original endpoints; each V slot is used
    // by exactly one layer edge.
    std::vector<unsigned char> slot_used(host.vertex_count(), 0);
    for (EdgeId oe = 0; oe < m; ++oe) {
        const Edge& he = host.edges()[gadget.layer_edge(oe)];
        if (gadget.is_u_vertex(he.u) || gadget.is_u_vertex(he.v)) return false;
        if (slot_used[he.u]++ || slot_used[he.v]++) return false;
        const VertexId a = gadget.owner(he.u);
        const VertexId b = gadget.owner(he.v);
        const Edge& orig = g.edges()[oe];
        const bool forward = a == orig.u && b == orig.v;
        const bool backward = a == orig.v && b == orig.u;
        if (!forward && !backward) return false;
        if (gadget.original_edge(gadget.layer_edge(oe)) != oe) return false;
    }
    for (std::size_t hv = k * n; hv < host.vertex_count(); ++hv) {
        if (!slot_used[hv]) return false;
    }
    return true;
}

}  // namespace corefactor
