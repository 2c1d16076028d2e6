#include "doctest.h"

#include "iop/models.hpp"

#include <random>
#include <set>

using namespace iop;

namespace {

Polynomial falling(int n) {
  std::vector<Rational> roots;
  for (int i = 0; i < n; ++i) roots.emplace_back(i);
  return Polynomial::from_roots(roots);
}

Graph random_graph(std::mt19937& rng, int n, double density) {
  std::bernoulli_distribution keep(density);
  Graph g{n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (keep(rng)) g.edges.emplace_back(i, j);
  return g;
}

SignedGraph random_signed(std::mt19937& rng, int n) {
  SignedGraph s{n, {}, {}, 0};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int roll = static_cast<int>(rng() % 4);
      if (roll == 1 || roll == 3) s.edges.push_back({i, j, 1});
      if (roll == 2 || roll == 3) s.edges.push_back({i, j, -1});
    }
  if (rng() % 3 == 0) s.halfedges.push_back(static_cast<int>(rng() % n));
  if (rng() % 4 == 0) s.edges.push_back({0, 0, -1});
  return s;
}

// Points of (0, t)^d whose form values are pairwise distinct, and optionally
// whose coordinates are too.
std::int64_t distinct_values_count(const LinearFormSet& f, std::int64_t t, bool strong) {
  const auto d = static_cast<std::size_t>(f.dim());
  std::vector<std::int64_t> x(d, 1);
  std::int64_t count = 0;
  if (t < 2) return 0;
  while (true) {
    std::set<Rational> values;
    for (Eigen::Index r = 0; r < f.count(); ++r) {
      Rational v = 0;
      for (std::size_t i = 0; i < d; ++i) v += f.forms(r, static_cast<Eigen::Index>(i)) * Rational(x[i]);
      values.insert(v);
    }
    const bool distinct_forms = static_cast<Eigen::Index>(values.size()) == f.count();
    const bool distinct_coords = std::set<std::int64_t>(x.begin(), x.end()).size() == d;
    count += distinct_forms && (!strong || distinct_coords);
    std::size_t k = 0;
    while (k < d && ++x[k] == t) x[k++] = 1;
    if (k == d) break;
  }
  return count;
}

}  // namespace

TEST_CASE("graphic arrangement") {
  const auto k2 = graphic_arrangement(Graph::complete(2));
  CHECK(k2.size() == 1);
  CHECK(k2[0] == Hyperplane(make_vector({1, -1}), 0));
  CHECK(graphic_arrangement(Graph::complete(3)).size() == 3);
  const Graph loop{2, {{0, 1}, {1, 1}}};
  CHECK(graphic_arrangement(loop).contains_degenerate());
  CHECK(chromatic_polynomial(loop).is_zero());
}

TEST_CASE("chromatic polynomial examples") {
  const auto k2 = chromatic_polynomial(Graph::complete(2));
  CHECK(k2 == falling(2));
  CHECK(k2(3) == 6);
  CHECK(chromatic_polynomial(Graph::complete(3)) == falling(3));
  CHECK(chromatic_polynomial(Graph{4, {}}) == Polynomial::monomial(4));
  CHECK(deletion_contraction(Graph::complete(3)) == Polynomial({0, 2, -3, 1}));
  CHECK(deletion_contraction(Graph::path(3)) == Polynomial::from_roots({0, 1, 1}));
  CHECK(deletion_contraction(Graph{1, {{0, 0}}}).is_zero());
  CHECK(characteristic_equals_chromatic(Graph::complete(3)));
  CHECK(characteristic_equals_chromatic(Graph::path(3)));
}

TEST_CASE("chromatic polynomial matches deletion-contraction and the characteristic polynomial") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 4;
    Graph g = random_graph(rng, n, 0.5);
    if (trial % 5 == 0 && !g.edges.empty()) g.edges.push_back(g.edges.front());  // parallel edge
    const auto chi = chromatic_polynomial(g);
    CHECK(chi == deletion_contraction(g));
    CHECK(characteristic_equals_chromatic(g));
    CHECK(acyclic_orientations(g) == acyclic_orientations_brute_force(g));
    for (int c = 2; c <= 3; ++c) CHECK(compatible_pairs_check(g, c));
  }
}

TEST_CASE("acyclic orientations") {
  CHECK(acyclic_orientations(Graph::complete(3)) == 6);
  CHECK(acyclic_orientations_brute_force(Graph::complete(3)) == 6);
  CHECK(acyclic_orientations(Graph::complete(2)) == 2);
  CHECK(acyclic_orientations(Graph::complete(4)) == 24);
  CHECK(acyclic_orientations_brute_force(Graph::complete(4)) == 24);
  CHECK(acyclic_orientations_brute_force(Graph{2, {{0, 1}, {0, 1}}}) == 2);
}

TEST_CASE("signed arrangements") {
  const SignedGraph pm{2, {{0, 1, 1}, {0, 1, -1}}, {}, 0};
  const auto h = signed_arrangement(pm, false);
  CHECK(h.size() == 2);
  CHECK(h.through(make_vector({0, 0})).size() == 2);
  const auto shifted = signed_arrangement(pm, true);
  CHECK(shifted.through(make_vector({Rational(1, 2), Rational(1, 2)})).size() == 2);
  CHECK(signed_arrangement(SignedGraph{1, {}, {0}, 0}, false)[0] == Hyperplane(make_vector({1}), 0));
  CHECK(signed_arrangement(SignedGraph{2, {}, {}, 1}, false).contains_degenerate());
  CHECK(signed_arrangement(SignedGraph{2, {{1, 1, 1}}, {}, 0}, true).contains_degenerate());
}

TEST_CASE("signed chromatic pairs") {
  const SignedGraph pm{2, {{0, 1, 1}, {0, 1, -1}}, {}, 0};
  const auto p = signed_chromatic_pair(pm);
  CHECK(p.chi == Polynomial::from_roots({1, 1}));
  CHECK(p.chi_star == Polynomial::from_roots({0, 2}));
  const auto pos = signed_chromatic_pair(SignedGraph::all_positive(Graph::complete(2)));
  CHECK(pos.chi == falling(2));
  CHECK(pos.chi_star == falling(2));
  const auto half = signed_chromatic_pair(SignedGraph{1, {}, {0}, 0});
  CHECK(half.chi == Polynomial({-1, 1}));
  CHECK(half.chi_star == Polynomial({0, 1}));
  CHECK(signed_chromatic_pair(SignedGraph{2, {}, {}, 1}).chi.is_zero());
  CHECK(signed_chromatic_pair(SignedGraph{2, {{0, 0, 1}}, {}, 0}).chi_star.is_zero());

  CHECK(signed_coloring_oracle(pm, 1, false) == 4);
  CHECK(signed_coloring_oracle(pm, 1, true) == 0);
  CHECK(signed_coloring_oracle(SignedGraph{1, {}, {}, 0}, 2, false) == 5);

  CHECK(signed_compatible_check(pm, 1));
  CHECK(region_count(signed_arrangement(pm, false)) == 4);
  CHECK(region_count(signed_arrangement(SignedGraph::all_positive(Graph::complete(2)), false)) == 2);
  CHECK(region_count(signed_arrangement(SignedGraph{1, {}, {0}, 0}, false)) == 2);
}

TEST_CASE("signed chromatic pairs agree with coloring oracles") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 14; ++trial) {
    const int n = 1 + trial % 3;
    const auto s = random_signed(rng, n);
    const auto p = signed_chromatic_pair(s);
    for (int c = 0; c <= 4; ++c) {
      CHECK(p.chi(Rational(2 * c + 1)) == signed_coloring_oracle(s, c, false));
      CHECK(p.chi_star(Rational(2 * c)) == signed_coloring_oracle(s, c, true));
    }
    if (s.balanced()) CHECK(p.chi == p.chi_star);
    const auto sw = signed_chromatic_pair(s.switched({0}));
    CHECK(sw.chi == p.chi);
    CHECK(sw.chi_star == p.chi_star);
    for (int c = 1; c <= 2; ++c) CHECK(signed_compatible_check(s, c));
  }
  // Unbalanced graphs separate the two polynomials.
  const SignedGraph triangle{3, {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}}, {}, 0};
  CHECK_FALSE(triangle.balanced());
  const auto p = signed_chromatic_pair(triangle);
  CHECK_FALSE(p.chi == p.chi_star);
}

TEST_CASE("compositions") {
  const Graph k2 = Graph::complete(2);
  CHECK(composition_count(k2, 4) == 2);
  CHECK(composition_count(k2, 5) == 4);
  CHECK(composition_count(Graph{2, {}}, 4) == 3);
  CHECK(composition_reciprocity_oracle(k2, 0) == 2);
  CHECK(composition_reciprocity_oracle(k2, 1) == 2);
  CHECK(composition_reciprocity_oracle(Graph{2, {}}, 2) == 3);

  const std::vector<Graph> graphs = {k2, Graph{2, {}}, Graph::complete(3), Graph::path(3),
                                     Graph{3, {{0, 1}}}, Graph::cycle(4), Graph::path(4),
                                     Graph{4, {{0, 1}, {2, 3}}}};
  for (const auto& g : graphs) {
    const auto c = composition_counter(g);
    CHECK(c.period_bound == lcm_up_to(g.largest_component()));
    CHECK(c.quasipolynomial.period() % c.quasipolynomial.minimal_period() == 0);
    const std::int64_t horizon = std::min<std::int64_t>(3 * c.period_bound, 24);
    for (std::int64_t t = 1; t <= horizon; ++t) {
      CHECK(c.quasipolynomial(t) == composition_count_brute_force(g, t));
      CHECK(composition_count(g, t) == composition_count_brute_force(g, t));
    }
    const Rational sign = g.order % 2 ? 1 : -1;
    for (std::int64_t t = 0; t <= 6; ++t)
      CHECK(c.quasipolynomial(-t) * sign == composition_reciprocity_oracle(g, t));
    // The constant term carries the same sign as the reciprocal at t = 0.
    CHECK(c.quasipolynomial(0) * sign == acyclic_orientations_brute_force(g));
    const InsideOutPolytope iop(Polytope::standard_simplex(g.order), graphic_arrangement(g));
    CHECK(c.period_bound % to_int64(iop.denominator()) == 0);
  }
  CHECK(to_int64(InsideOutPolytope(Polytope::standard_simplex(3), graphic_arrangement(Graph::complete(3)))
                     .denominator()) == 6);
}

TEST_CASE("pullbacks") {
  const LinearFormSet coords{make_matrix({{1, 0}, {0, 1}}), {}};
  const auto p = pullback_arrangement(coords);
  CHECK(p.arrangement.size() == 1);
  CHECK(p.arrangement[0] == Hyperplane(make_vector({1, -1}), 0));
  const LinearFormSet twins{make_matrix({{1, 1}, {1, 1}}), {}};
  const auto q = pullback_arrangement(twins);
  CHECK(q.degenerate_pairs.size() == 1);
  CHECK(q.arrangement.contains_degenerate());
  CHECK_THROWS_AS(antimagic_enumerators(twins, false), EqualForms);
  CHECK(pullback_arrangement(square_forms(2, SquareLines::semi)).arrangement.size() == 4);
  CHECK(pullback_arrangement(square_forms(2, SquareLines::diagonals)).arrangement.size() == 9);
}

TEST_CASE("2x2 antimagic squares") {
  const auto semi = square_forms(2, SquareLines::semi);
  CHECK(semi.count() == 4);
  const auto weak = antimagic_enumerators(semi, false);
  const Quasipolynomial expected_weak = Quasipolynomial::polynomial(
      Polynomial::from_roots({1, 2, 3}) * Polynomial({Rational(-4, 3), 1}));
  CHECK(weak.open == expected_weak);
  CHECK(weak.open(4) == 16);
  CHECK(weak.open(5) == 88);
  CHECK(weak.denominator == 1);
  CHECK(weak.mobius_verified);

  const auto strong = antimagic_enumerators(semi, true);
  const Polynomial odd = Polynomial::from_roots({1, 3}) * Polynomial({Rational(38, 3), Rational(-22, 3), 1});
  const Polynomial even = Polynomial::from_roots({2, 4}) * Polynomial({5, Rational(-16, 3), 1});
  CHECK(strong.open == Quasipolynomial({even, odd}));
  CHECK(strong.open(5) == 8);
  CHECK(strong.denominator == 2);

  const auto full = square_forms(2, SquareLines::diagonals);
  const Polynomial full_odd = Polynomial::from_roots({1, 5, 3, 3});
  const Polynomial full_even = Polynomial::from_roots({2, 4}) * Polynomial({6, -6, 1});
  const auto a = antimagic_enumerators(full, false);
  const auto b = antimagic_enumerators(full, true);
  CHECK(a.open == Quasipolynomial({full_even, full_odd}));
  CHECK(b.open == a.open);
  CHECK(a.closed == reciprocal(a.open, 4));

  for (std::int64_t t = 1; t <= 8; ++t) {
    CHECK(weak.open(t) == distinct_values_count(semi, t, false));
    CHECK(strong.open(t) == distinct_values_count(semi, t, true));
    CHECK(a.open(t) == distinct_values_count(full, t, false));
  }
}

TEST_CASE("antimagic enumerators on other form sets") {
  const auto nodes = node_sums(Graph::path(3));
  CHECK(nodes.forms == make_matrix({{1, 0}, {1, 1}, {0, 1}}));
  const auto edges = edge_sums(Graph::complete(2));
  CHECK(edges.forms == make_matrix({{1, 1}}));
  const auto e = antimagic_enumerators(edges, false);
  CHECK(e.hyperplanes == 0);
  CHECK(e.open == Quasipolynomial::polynomial(Polynomial::from_roots({1, 1})));

  const auto k3 = edge_sums(Graph::complete(3));
  CHECK(k3.equal_weight());
  for (bool strong : {false, true}) {
    const auto r = antimagic_enumerators(k3, strong);
    CHECK(r.mobius_verified);
    CHECK(r.closed == reciprocal(r.open, 3));
    CHECK(r.open.leading_coefficient(0) == 1);
    for (std::int64_t t = 1; t <= 7; ++t) CHECK(r.open(t) == distinct_values_count(k3, t, strong));
  }
  // Unequal weights: the Mobius shortcut is not claimed.
  const auto p3 = antimagic_enumerators(nodes, false);
  CHECK_FALSE(p3.equal_weight);
  CHECK_FALSE(p3.mobius_verified);
  for (std::int64_t t = 1; t <= 7; ++t) CHECK(p3.open(t) == distinct_values_count(nodes, t, false));

  for (std::int64_t t = 1; t <= 6; ++t) {
    CHECK(antimagic_brute_force(k3, t, true) == distinct_values_count(k3, t, true));
    CHECK(antimagic_brute_force(nodes, t, false) == distinct_values_count(nodes, t, false));
  }

  const auto total = total_sums(Graph::complete(2));
  CHECK(total.forms == make_matrix({{1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
}

TEST_CASE("clutters") {
  const auto f = clutter_forms(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
  CHECK(f.count() == 4);
  CHECK(f.equal_weight());
  CHECK(f.clutter.has_value());
  CHECK_THROWS_AS(clutter_forms(3, {{0}, {0, 1}, {2}}), ClutterViolation);
  CHECK_THROWS_AS(clutter_forms(3, {{0, 1}}), ClutterViolation);
  CHECK_THROWS_AS(clutter_forms(2, {{0, 1}, {}}), ClutterViolation);
  CHECK(square_forms(3, SquareLines::diagonals).count() == 8);
  CHECK(square_forms(3, SquareLines::wrapped).count() == 12);
  CHECK(square_forms(2, SquareLines::wrapped).count() == 6);
}
