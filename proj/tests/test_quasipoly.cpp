#include "doctest.h"

#include "iop/quasipoly.hpp"

#include <random>

using namespace iop;

namespace {

Quasipolynomial random_quasi(std::mt19937& rng, std::int64_t p, int d) {
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<Polynomial> cs;
  for (std::int64_t r = 0; r < p; ++r) {
    std::vector<Rational> coeffs;
    for (int i = 0; i <= d; ++i) coeffs.emplace_back(c(rng), 1 + rng() % 3);
    cs.emplace_back(coeffs);
  }
  return Quasipolynomial(cs);
}

}  // namespace

TEST_CASE("interpolation examples") {
  CHECK(interpolate([](std::int64_t t) { return t + 1; }, 1, 1) == Quasipolynomial::polynomial({1, 1}));
  CHECK(interpolate([](std::int64_t t) { return (t + 1) * (t + 1); }, 2, 1) ==
        Quasipolynomial::polynomial({1, 2, 1}));
  const auto q = interpolate([](std::int64_t t) { return t % 2 ? t : t + 1; }, 1, 2);
  CHECK(q.period() == 2);
  CHECK(q.constituent(0) == Polynomial({1, 1}));
  CHECK(q.constituent(1) == Polynomial({0, 1}));
  // An over-generous degree bound still recovers the exact polynomial.
  CHECK(interpolate([](std::int64_t t) { return 3 * t - 7; }, 4, 3).canonical() ==
        Quasipolynomial::polynomial({-7, 3}));
}

TEST_CASE("evaluation at negative arguments") {
  CHECK(Quasipolynomial::polynomial({0, 0, 1})(-3) == 9);
  const Quasipolynomial q({Polynomial({0, 1}), Polynomial({1, 1})});
  CHECK(q(-1) == 0);
  CHECK(q(-2) == -2);
  CHECK(Quasipolynomial()(17) == 0);
  CHECK(Quasipolynomial()(-17) == 0);
}

TEST_CASE("reciprocal examples") {
  CHECK(reciprocal(Quasipolynomial::polynomial({0, 0, 1}), 2) == Quasipolynomial::polynomial({0, 0, 1}));
  CHECK(reciprocal(Quasipolynomial::polynomial({0, 1}), 1) == Quasipolynomial::polynomial({0, 1}));
  CHECK(reciprocal(Quasipolynomial::polynomial({1, 1}), 1) == Quasipolynomial::polynomial({-1, 1}));
  CHECK(reciprocal(Quasipolynomial::polynomial({2, -3, 1}), 2) == Quasipolynomial::polynomial({2, 3, 1}));
}

TEST_CASE("canonical form and accessors") {
  const Quasipolynomial doubled({Polynomial({1, 2}), Polynomial({1, 2})});
  CHECK(doubled.minimal_period() == 1);
  CHECK(doubled == Quasipolynomial::polynomial({1, 2}));
  CHECK(doubled.canonical().period() == 1);
  const auto p = Quasipolynomial::polynomial(Polynomial::from_roots({1, 2}));
  CHECK(p.leading_coefficient(0) == 1);
  CHECK(p.constant_term(0) == 2);
  const Quasipolynomial q({Polynomial({0, 1}), Polynomial({1, 1}), Polynomial({0, 1}), Polynomial({1, 1})});
  CHECK(q.minimal_period() == 2);
  CHECK_FALSE(q == Quasipolynomial::polynomial({0, 1}));
}

TEST_CASE("stretching") {
  const Quasipolynomial q({Polynomial({1, 1}), Polynomial({0, 2})});
  const auto s = q.stretched(3);
  CHECK(s.period() == 6);
  for (std::int64_t t = -30; t <= 30; ++t) CHECK(s(t) == (t % 3 == 0 ? q(t / 3) : Rational(0)));
}

TEST_CASE("serialization round trip") {
  const Quasipolynomial q({Polynomial({Rational(1, 3), 0, 1}), Polynomial({-2})});
  CHECK(q.serialize() == "period 2; residue 0: [1/3, 0, 1]; residue 1: [-2, 0, 0]");
  CHECK(Quasipolynomial::parse(q.serialize()) == q);
  CHECK(Quasipolynomial().serialize() == "period 1; residue 0: [0]");
  CHECK_THROWS(Quasipolynomial::parse("period 2; residue 0: [1]"));
  CHECK_THROWS(Quasipolynomial::parse("residue 0: [1]"));
}

TEST_CASE("quasipolynomial properties") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t p = 1 + trial % 4;
    const int d = trial % 4;
    const auto q = random_quasi(rng, p, d);
    for (int dim = 0; dim < 3; ++dim) CHECK(reciprocal(reciprocal(q, dim), dim) == q);
    const auto r = reciprocal(q, d);
    for (std::int64_t t = -12; t <= 12; ++t) CHECK(r(t) == (d % 2 ? -q(-t) : q(-t)));
    CHECK(q.inflated(p * 3) == q);
    CHECK(q.inflated(p * 2).canonical() == q.canonical());
    CHECK(Quasipolynomial::parse(q.serialize()) == q);

    // Integer-valued scaled version, interpolated back.
    Integer scale = 1;
    for (const auto& c : q.constituents())
      for (const auto& a : c.coefficients()) scale = lcm(scale, denominator_of(a));
    auto f = [&](std::int64_t t) { return to_int64(numerator_of(q(t) * Rational(scale))); };
    const auto back = interpolate(f, d, p);
    for (std::int64_t t = -20; t <= 40; ++t) CHECK(back(t) == q(t) * Rational(scale));
  }
}
