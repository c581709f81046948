#pragma once

#include <string>
#include <string_view>

#include "cyclebench/graph.hpp"

namespace cyc {

// Standard graph6 interchange format, one graph per line: a 6-bit printable
// encoding of n followed by the upper triangle of the adjacency matrix in the
// order x(0,1), x(0,2), x(1,2), x(0,3), ...
std::string encode_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);  // throws parse_error with byte offset

}  // namespace cyc
