#include "corefactor/edge_list_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace corefactor {

MultiGraph read_edge_list(std::istream& in) {
    // Parse the header as signed so "-1" is rejected rather than wrapped.
    long long n_ll = 0, m_ll = 0;
    if (!(in >> n_ll >> m_ll)) throw std::invalid_argument("edge list: missing 'n m' header");
    if (n_ll < 0 || m_ll < 0) throw std::invalid_argument("edge list: negative header count");
    constexpr long long kMaxId = std::numeric_limits<VertexId>::max();
    if (n_ll > kMaxId || m_ll > kMaxId) throw std::invalid_argument("edge list: header too large");
    const std::size_t n = static_cast<std::size_t>(n_ll);
    const std::size_t m = static_cast<std::size_t>(m_ll);
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        unsigned long long u = 0, v = 0;
        if (!(in >> u >> v)) {
            throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                     " edges, got " + std::to_string(i));
        }
        if (u >= n || v >= n) {
            throw std::invalid_argument("edge list: endpoint out of range on line " +
                                     std::to_string(i + 2));
        }
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
    return MultiGraph(n, std::move(edges));
}

MultiGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const MultiGraph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list_file(const std::string& path, const MultiGraph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_edge_list(out, g);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace corefactor
