#include "iop/io.hpp"

#include <doctest.h>

using namespace iop;

namespace {

int error_line(auto&& parse) {
  try {
    parse();
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("polytope file") {
  const Polytope p = parse_polytope(
      "# unit square\n"
      "dim 2\n"
      "1 0 <= 1\n"
      "0 1 <= 1\n"
      "\n"
      "1 0 >= 0   # lower bound\n"
      "0 1 >= 0\n");
  CHECK(p.ambient_dim() == 2);
  CHECK(p.full_dimensional());
  CHECK(p.vertices().size() == 4);

  const Polytope seg = parse_polytope("dim 2\n1 1 = 1\n-1 0 <= 0\n0 -1 <= 0\n");
  CHECK(seg.dimension() == 1);
  CHECK(parse_polytope("dim 1\n2 <= 1/2\n-1 <= 0\n").vertices().size() == 2);
}

TEST_CASE("polytope file errors carry line numbers") {
  CHECK(error_line([] { parse_polytope("1 0 <= 1\n"); }) == 1);
  CHECK(error_line([] { parse_polytope("dim 2\n1 0 <= 1\n0 1 <=\n"); }) == 3);
  CHECK(error_line([] { parse_polytope("dim 2\n\n1 0 0 <= 1\n"); }) == 3);
  CHECK(error_line([] { parse_polytope("dim 2\n1 x <= 1\n"); }) == 2);
  CHECK(error_line([] { parse_polytope("dim 2\n1 0 < 1\n"); }) == 2);
  CHECK(error_line([] { parse_polytope("dim 0\n"); }) == 1);
  CHECK(error_line([] { parse_polytope("dim 2\n1 0 <= 1/0\n"); }) == 2);
  // geometric failures are not parse errors
  CHECK_THROWS_AS(parse_polytope("dim 1\n1 <= 1\n"), UnboundedPolytope);
  CHECK_THROWS_AS(parse_polytope("dim 1\n1 <= 0\n-1 <= -1\n"), EmptyPolytope);
}

TEST_CASE("arrangement file") {
  const Arrangement a = parse_arrangement("1 -1 = 0\n0 1 = 1/2\n1 -1 = 0\n");
  CHECK(a.dim() == 2);
  CHECK(a.size() == 2);
  CHECK(parse_arrangement("dim 3\n").size() == 0);
  CHECK(parse_arrangement("dim 3\n").dim() == 3);
  CHECK(error_line([] { parse_arrangement("1 0 = 0\n1 0 0 = 0\n"); }) == 2);
  CHECK(error_line([] { parse_arrangement("1 0 <= 0\n"); }) == 1);
  CHECK(error_line([] { parse_arrangement(""); }) >= 0);
}

TEST_CASE("instance file") {
  const Instance inst = parse_instance(
      "dim 2\n-1 0 <= 0\n0 -1 <= 0\n1 1 <= 1\narrangement\n1 -1 = 0\n");
  CHECK(inst.polytope.vertices().size() == 3);
  CHECK(inst.arrangement.size() == 1);
  CHECK(error_line([] { parse_instance("dim 2\n1 0 <= 1\n"); }) >= 0);
  CHECK(error_line([] {
          parse_instance("dim 2\n-1 0 <= 0\n0 -1 <= 0\n1 1 <= 1\narrangement\n1 -1 0 = 0\n");
        }) == 6);
}

TEST_CASE("graph files") {
  const Graph g = parse_graph("n 3\nedge 1 2\nedge 2 3 # path\n");
  CHECK(g.order == 3);
  REQUIRE(g.edges.size() == 2);
  CHECK(g.edges[0] == std::pair{0, 1});
  CHECK(error_line([] { parse_graph("edge 1 2\n"); }) == 1);
  CHECK(error_line([] { parse_graph("n 2\nedge 1 3\n"); }) == 2);
  CHECK(error_line([] { parse_graph("n 2\nedge 0 1\n"); }) == 2);
  CHECK(error_line([] { parse_graph("n 2\n\narc 1 2\n"); }) == 3);

  const SignedGraph s = parse_signed_graph("n 2\nedge 1 2\nsedge 1 2 -\nhalfedge 2\nloose\n");
  CHECK(s.order == 2);
  REQUIRE(s.edges.size() == 2);
  CHECK(s.edges[0].sign == 1);
  CHECK(s.edges[1].sign == -1);
  CHECK(s.halfedges == std::vector<int>{1});
  CHECK(s.loose == 1);
  CHECK(error_line([] { parse_signed_graph("n 2\nsedge 1 2 *\n"); }) == 2);
}

TEST_CASE("forms files") {
  const LinearFormSet f = parse_forms("1 1 0\n0 1 1\n");
  CHECK(f.count() == 2);
  CHECK(f.dim() == 3);
  CHECK(parse_forms("square 2\n").count() == 4);
  CHECK(parse_forms("square 3 diagonals\n").count() == 8);
  CHECK(parse_forms("# comment\nsquare 3 wrapped\n").count() == 12);
  CHECK(error_line([] { parse_forms("square 2 sideways\n"); }) == 1);
  CHECK(error_line([] { parse_forms("1 1\n1 1 1\n"); }) == 2);
}

TEST_CASE("subspace files") {
  const SubspaceArrangement a = parse_subspaces(
      "# the x3-axis\n1 0 0 = 0\n0 1 0 = 0\n\n0 0 1 = 1\n");
  CHECK(a.dim() == 3);
  REQUIRE(a.size() == 2);
  CHECK(a[0].dim() == 1);
  CHECK(a[1].dim() == 2);
  // comment-only lines do not separate blocks
  CHECK(parse_subspaces("1 0 0 = 0\n# still the axis\n0 1 0 = 0\n").size() == 1);
  CHECK(error_line([] { parse_subspaces("1 0 = 0\n\n1 0 0 = 0\n"); }) == 3);
  CHECK(error_line([] { parse_subspaces("1 0 = 0\n1 0 = 1\n"); }) >= 0);
}

TEST_CASE("read_file") {
  CHECK_THROWS_AS(read_file("/nonexistent/file"), Error);
}
