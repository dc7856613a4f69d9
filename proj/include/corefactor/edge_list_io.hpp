#pragma once

#include <iosfwd>
#include <string>

#include "corefactor/multigraph.hpp"

namespace corefactor {

// Text edge-list format: first line "n m", then m lines "u v" with 0-based
// vertex ids, one edge per line, in edge-id order. Parallel edges appear as
// repeated lines. Round-trips exactly.
MultiGraph read_edge_list(std::istream& in);
MultiGraph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const MultiGraph& g);
void write_edge_list_file(const std::string& path, const MultiGraph& g);

}  // namespace corefactor
