#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "reachpairs/digraph.hpp"

namespace reachpairs {

// Text format: a header line `n <count>`, then one `u v` edge per line.
// Vertices are 0-indexed; `#` starts a comment that runs to end of line.
// Throws ParseError on malformed input, self-loops or out-of-range vertices.
Digraph parse_digraph(std::istream& in);
Digraph parse_digraph(std::string_view text);

std::string format_digraph(const Digraph& g);

// Graphviz digraph. Every vertex is listed so isolated vertices show up.
std::string to_dot(const Digraph& g, std::string_view name = "G");

}  // namespace reachpairs
