#include "corefactor/random_graph.hpp"

#include <cmath>
#include <stdexcept>

#include "corefactor/rng.hpp"

namespace corefactor {

MultiGraph gnp_random(std::size_t n, double c, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gnp_random: n must be >= 1");
    if (!(c >= 0.0)) throw std::invalid_argument("gnp_random: c must be >= 0");
    if (c > static_cast<double>(n - 1)) {
        throw std::invalid_argument("gnp_random: c must be <= n-1");
    }
    std::vector<Edge> edges;
    if (n == 1 || c == 0.0) return MultiGraph(n, std::move(edges));

    const double p = c / static_cast<double>(n - 1);  // mean degree exactly c
    Rng rng(seed);

    if (p >= 1.0) {  // complete graph, no sampling needed
        edges.reserve(n * (n - 1) / 2);
        for (std::size_t u = 0; u + 1 < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
            }
        }
        return MultiGraph(n, std::move(edges));
    }

    edges.reserve(static_cast<std::size_t>(c * static_cast<double>(n) / 2.0 * 1.1) + 16);
    // Walk the lexicographic pair sequence (0,1),(0,2),...,(n-2,n-1) with
    // geometric skips: skip ~ floor(log(1-U)/log(1-p)) pairs between hits.
    const double log1mp = std::log1p(-p);
    std::size_t row = 0;                // current u
    std::size_t pos = 1;                // next candidate v in the row
    while (row + 1 < n) {
        const double u01 = uniform01(rng);
        double skip_f = std::floor(std::log1p(-u01) / log1mp);
        // advance by skip_f + the hit itself
        std::size_t remaining_in_row = n - pos;
        while (row + 1 < n && skip_f >= static_cast<double>(remaining_in_row)) {
            skip_f -= static_cast<double>(remaining_in_row);
            ++row;
            pos = row + 1;
            remaining_in_row = n - pos;
        }
        if (row + 1 >= n) break;
        pos += static_cast<std::size_t>(skip_f);  // < n: the while loop capped the skip
        edges.push_back({static_cast<VertexId>(row), static_cast<VertexId>(pos)});
        ++pos;
        if (pos >= n) {
            ++row;
            pos = row + 1;
        }
    }
    return MultiGraph(n, std::move(edges));
}

}  // namespace corefactor
