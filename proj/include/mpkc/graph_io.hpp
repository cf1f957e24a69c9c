#ifndef MPKC_GRAPH_IO_HPP
#define MPKC_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "mpkc/graph.hpp"

namespace mpkc {

// Text format: a `p <n> <m>` header, then m lines `e <u> <v>` with 1-indexed
// endpoints; lines starting with `c` are comments. Duplicate edges, self-loops
// and malformed lines raise ParseError naming the line.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

} // namespace mpkc

#endif
