#pragma once

#include <string>

#include "specham/errors.hpp"
#include "specham/graph.hpp"

namespace specham {

// graph6 ASCII interchange format: header encodes the order (one byte for
// n <= 62, '~' plus three bytes for larger n), followed by the upper-triangle
// adjacency bits in column-major order packed into 6-bit groups offset by 63.
//
// emit_graph6 produces the canonical string (zero padding bits); parse_graph6
// accepts any padding and reports distinct errors for a malformed header, an
// out-of-range byte, a truncated bit payload, and trailing bytes.
std::string emit_graph6(const Graph& g);
Graph parse_graph6(const std::string& text);

// Whitespace-separated edge list, one "u v" pair per edge, with an optional
// leading "n=<int>" token fixing the order (otherwise inferred as the largest
// endpoint plus one). Lines starting with '#' are comments.
std::string emit_edgelist(const Graph& g);
Graph parse_edgelist(const std::string& text);

} // namespace specham
