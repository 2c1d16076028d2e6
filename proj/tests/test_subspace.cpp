#include "doctest.h"

#include "iop/subspace.hpp"

#include <random>

using namespace iop;

namespace {

Flat flat(std::initializer_list<std::initializer_list<Rational>> rows, std::initializer_list<Rational> rhs) {
  return Flat::from_equations(make_matrix(rows), make_vector(rhs)).value();
}

Polytope symmetric_cube(Eigen::Index d) {
  const RationalVector ones = RationalVector::Constant(d, Rational(1));
  return Polytope::box(-ones, ones);
}

Flat random_flat(std::mt19937& rng, Eigen::Index d) {
  std::uniform_int_distribution<int> c(-1, 1);
  while (true) {
    const Eigen::Index codim = 1 + static_cast<Eigen::Index>(rng() % (d - 1));
    RationalMatrix a(codim, d);
    RationalVector b(codim);
    for (Eigen::Index r = 0; r < codim; ++r) {
      for (Eigen::Index i = 0; i < d; ++i) a(r, i) = c(rng);
      b(r) = Rational(static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 2));
    }
    if (rank(a) != codim) continue;
    if (auto f = Flat::from_equations(a, b)) return *f;
  }
}

}  // namespace

TEST_CASE("subspace posets") {
  const SubspaceArrangement line(3, {flat({{0, 1, 0}, {0, 0, 1}}, {0, 0})});
  const auto l = subspace_poset(line);
  CHECK(l.size() == 2);
  CHECK(l.mobius_from_bottom(1) == -1);
  CHECK(extrinsic_ranks(l) == std::vector<int>{0, 2});

  const SubspaceArrangement skew(3, {flat({{1, 0, 0}, {0, 1, 0}}, {0, 0}), flat({{1, 0, 0}, {0, 0, 1}}, {1, 0})});
  CHECK(subspace_poset(skew).size() == 3);

  const SubspaceArrangement chain(3, {flat({{0, 0, 1}}, {0}), flat({{0, 1, 0}, {0, 0, 1}}, {0, 0})});
  const auto c = subspace_poset(chain);
  CHECK(c.size() == 3);
  CHECK(c.leq(1, 2));
  CHECK(c.mobius_from_bottom(2) == 0);

  SubspaceArrangement dup(2);
  CHECK(dup.add(flat({{1, 0}}, {0})));
  CHECK_FALSE(dup.add(flat({{2, 0}}, {0})));
  CHECK_THROWS_AS(dup.add(Flat::ambient(2)), DegenerateArrangement);
}

TEST_CASE("subspace multiplicity") {
  const SubspaceArrangement line(3, {flat({{0, 1, 0}, {0, 0, 1}}, {0, 0})});
  const Polytope c = symmetric_cube(3);
  CHECK(subspace_multiplicity(line, c, make_vector({0, 1, 0})) == 1);
  CHECK(subspace_multiplicity(line, c, make_vector({Rational(1, 2), 0, 0})) == 0);
  CHECK(subspace_multiplicity(line, c, make_vector({2, 0, 0})) == 0);
  // Two lines through the origin: 1 - 1 - 1 + mu(point) (-1)^3 with mu = 1.
  const SubspaceArrangement cross(3, {flat({{0, 1, 0}, {0, 0, 1}}, {0, 0}), flat({{1, 0, 0}, {0, 0, 1}}, {0, 0})});
  CHECK(subspace_multiplicity(cross, c, make_vector({0, 0, 0})) == -2);
}

TEST_CASE("axis line in the symmetric cube") {
  const SubspaceInsideOut s(symmetric_cube(3), SubspaceArrangement(3, {flat({{0, 1, 0}, {0, 0, 1}}, {0, 0})}));
  CHECK(s.transverse());
  CHECK(s.denominator() == 1);
  for (std::int64_t t = 1; t <= 6; ++t) {
    const std::int64_t side = 2 * t + 1;
    CHECK(s.open_count(t) == side * side * side - side);
    CHECK(s.open_count_mobius(t) == side * side * side - side);
    CHECK(s.closed_count(t) == side * side * side - side);
    CHECK(s.closed_count_mobius(t) == side * side * side - side);
    CHECK(s.open_count(t, true) == (side - 2) * (side - 2) * (side - 2) - (side - 2));
  }
  CHECK(s.check_reciprocity(6));
}

TEST_CASE("centred line in the unit cube") {
  const Rational h(1, 2);
  const SubspaceInsideOut s(Polytope::cube(3), SubspaceArrangement(3, {flat({{0, 1, 0}, {0, 0, 1}}, {h, h})}));
  CHECK(s.denominator() == 2);
  const auto q = s.ehrhart(Enumerator::open);
  CHECK(q.minimal_period() == 2);
  for (std::int64_t t = 1; t <= 10; ++t) CHECK(q(t) == (t + 1) * (t + 1) * (t + 1) - (t % 2 ? 0 : t + 1));
  CHECK(s.check_reciprocity(8));
}

TEST_CASE("non-transverse subspaces") {
  const SubspaceInsideOut corner(Polytope::cube(2), SubspaceArrangement(2, {Flat::point(make_vector({0, 0}))}));
  CHECK_FALSE(corner.transverse());
  CHECK_THROWS_AS(corner.open_count_mobius(2), NotTransverse);
  CHECK_THROWS_AS(corner.check_reciprocity(3), NotTransverse);
  // Reciprocity genuinely fails here, which is why transversality is required.
  const auto closed = corner.ehrhart(Enumerator::closed);
  const auto open = corner.ehrhart(Enumerator::open_interior);
  CHECK(closed == Quasipolynomial::polynomial({0, 2, 1}));
  CHECK(open == Quasipolynomial::polynomial({1, -2, 1}));
  CHECK_FALSE(reciprocity_holds(closed, open, 2));
}

TEST_CASE("hyperplane arrangements specialize") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> c(-1, 1);
  int transverse_seen = 0;
  for (int trial = 0; trial < 16; ++trial) {
    Arrangement h(2);
    while (h.size() < 3) {
      const RationalVector n = make_vector({c(rng), c(rng)});
      if (n.isZero()) continue;
      h.add(Hyperplane(n, Rational(static_cast<int>(rng() % 3), 2)));
    }
    const InsideOutPolytope iop(Polytope::cube(2), h);
    const SubspaceInsideOut s(Polytope::cube(2), SubspaceArrangement::from_hyperplanes(h));
    CHECK(s.transverse() == iop.transverse());
    CHECK(s.denominator() == iop.denominator());
    for (std::int64_t t = 1; t <= 6; ++t) {
      CHECK(s.open_count(t) == iop.open_count(t));
      CHECK(s.open_count(t, true) == iop.open_count(t, true));
      if (iop.transverse()) CHECK(s.closed_count(t) == iop.closed_count(t));
    }
    transverse_seen += iop.transverse();
  }
  CHECK(transverse_seen > 0);
}

TEST_CASE("Mobius identities and reciprocity on random subspace arrangements") {
  std::mt19937 rng(9);
  int transverse_seen = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index d = 3 + trial % 2;
    SubspaceArrangement a(d);
    const int count = 1 + static_cast<int>(rng() % 4);
    while (static_cast<int>(a.size()) < count) a.add(random_flat(rng, d));
    const SubspaceInsideOut s(Polytope::cube(d), a);
    const std::int64_t horizon = d == 3 ? 8 : 4;
    const auto l = subspace_poset(a);
    for (std::int64_t t = 1; t <= horizon; ++t) {
      // Naive oracle straight from the multiplicity definition.
      std::int64_t closed = 0, open = 0;
      std::vector<int> x(static_cast<std::size_t>(d), 0);
      while (true) {
        RationalVector pt(d);
        for (Eigen::Index i = 0; i < d; ++i) pt(i) = Rational(x[static_cast<std::size_t>(i)], t);
        closed += subspace_multiplicity(l, s.polytope(), pt);
        bool off = true;
        for (const auto& f : a.subspaces()) off = off && !f.contains(pt);
        open += off;
        std::size_t k = 0;
        while (k < x.size() && ++x[k] > t) x[k++] = 0;
        if (k == x.size()) break;
      }
      CHECK(s.closed_count(t) == closed);
      CHECK(s.open_count(t) == open);
      if (s.transverse()) {
        CHECK(s.closed_count_mobius(t) == closed);
        CHECK(s.open_count_mobius(t) == open);
        CHECK(s.open_count_mobius(t, true) == s.open_count(t, true));
      }
    }
    if (s.transverse() && to_int64(s.denominator()) <= 4) {
      ++transverse_seen;
      CHECK(s.check_reciprocity(horizon));
    }
  }
  CHECK(transverse_seen > 3);
}
