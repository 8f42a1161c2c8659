#ifndef IDPOLY_EDGELIST_HPP
#define IDPOLY_EDGELIST_HPP

#include <iosfwd>
#include <string>

#include "idpoly/graph.hpp"

namespace idpoly {

// Edge-list text format: optional '#' comment lines; first data line
// "n m" (vertex count, data line count); then m lines "u v" with
// 0 <= u,v < n. "u v" with u != v is an edge, "u u" is a loop on u.
// Duplicate edges or loops are a parse error.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

std::string serialize_edge_list(const Graph& g);

} // namespace idpoly

#endif
