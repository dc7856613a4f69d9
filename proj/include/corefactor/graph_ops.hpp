#pragma once

#include "corefactor/multigraph.hpp"

namespace corefactor {

// Number of edges with one endpoint in s and one endpoint in t. Each edge is
// counted at most once; for s == t this is the number of edges with both
// endpoints in s, for disjoint sets the number of cross edges.
std::size_t lambda_st(const MultiGraph& g, const VertexSet& s, const VertexSet& t);

// Connected components of g - removed, each a sorted VertexSet, ordered by
// their smallest vertex.
std::vector<VertexSet> components(const MultiGraph& g, const VertexSet& removed);

// Number of odd-cardinality components of g - removed.
std::size_t odd_components(const MultiGraph& g, const VertexSet& removed);

// New graph with one extra vertex (id n) joined to v by `multiplicity`
// parallel edges. Original vertex and edge ids are preserved; the new edges
// take ids m .. m+multiplicity-1.
MultiGraph attach_apex(const MultiGraph& g, VertexId v, int multiplicity);

}  // namespace corefactor
