#pragma once

// Text formats. Blank lines and everything after '#' are ignored except
// where blank lines separate blocks. Node numbers in graph files are 1-based.
// All parsers throw ParseError carrying the 1-based line number.

#include "iop/models.hpp"
#include "iop/subspace.hpp"

#include <string>
#include <string_view>

namespace iop {

/// `dim d`, then `a1 ... ad <= b`, `a1 ... ad >= b` or `a1 ... ad = b` per line.
Polytope parse_polytope(std::string_view text);
/// `a1 ... ad = b` per line; an optional leading `dim d` fixes the dimension.
Arrangement parse_arrangement(std::string_view text);

struct Instance {
  Polytope polytope;
  Arrangement arrangement;
};

/// A polytope block, a line reading `arrangement`, then hyperplanes.
Instance parse_instance(std::string_view text);

/// `n <order>`, then `edge i j` lines.
Graph parse_graph(std::string_view text);
/// `n <order>`, then `edge i j` (positive), `sedge i j +|-`, `halfedge i`, `loose`.
SignedGraph parse_signed_graph(std::string_view text);
/// One form per line as coefficient rows, or a single `square n [diagonals|wrapped]`.
LinearFormSet parse_forms(std::string_view text);
/// Blocks of `a1 ... ad = b` lines separated by blank lines, one block per subspace.
SubspaceArrangement parse_subspaces(std::string_view text);

/// Throws Error when the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace iop
