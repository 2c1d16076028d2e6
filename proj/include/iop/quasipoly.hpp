#pragma once

#include "iop/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace iop {

/// q(t) = constituent[t mod p](t), with the nonnegative residue, so q is
/// defined at every integer including negative ones.
class Quasipolynomial {
 public:
  Quasipolynomial() : constituents_(1) {}
  explicit Quasipolynomial(std::vector<Polynomial> constituents);
  static Quasipolynomial polynomial(Polynomial p) { return Quasipolynomial({std::move(p)}); }

  std::int64_t period() const { return static_cast<std::int64_t>(constituents_.size()); }
  const std::vector<Polynomial>& constituents() const { return constituents_; }
  const Polynomial& constituent(std::int64_t residue) const;
  /// Largest constituent degree (-1 when identically zero).
  int degree() const;

  Rational operator()(std::int64_t t) const;
  Rational coefficient(std::int64_t residue, int i) const { return constituent(residue).coefficient(i); }
  /// Coefficient of t^degree() in the selected constituent.
  Rational leading_coefficient(std::int64_t residue) const { return coefficient(residue, degree()); }
  Rational constant_term(std::int64_t residue) const { return coefficient(residue, 0); }

  std::int64_t minimal_period() const;
  Quasipolynomial canonical() const;
  /// Same function written with period `multiple` (must be a multiple of period()).
  Quasipolynomial inflated(std::int64_t multiple) const;
  /// s(t) = q(t / k) when k divides t, else 0. Period becomes k * period().
  Quasipolynomial stretched(std::int64_t k) const;

  /// `period p; residue 0: [c0, c1, ...]; residue 1: [...]`
  std::string serialize() const;
  static Quasipolynomial parse(std::string_view text);
  /// Readable form, one `t = r mod p: <polynomial>` clause per constituent.
  std::string to_string(const std::string& var = "t") const;

  friend bool operator==(const Quasipolynomial& a, const Quasipolynomial& b);

 private:
  std::vector<Polynomial> constituents_;
};

/// Least positive integer congruent to r mod p.
std::int64_t least_positive_representative(std::int64_t r, std::int64_t p);

/// Per residue r, solves the exact Vandermonde system through
/// t = r0, r0 + p, ..., r0 + d p where r0 is the least positive t = r (mod p).
Quasipolynomial interpolate(const std::function<std::int64_t(std::int64_t)>& f, int degree_bound,
                            std::int64_t period_bound);

/// r(t) = (-1)^dim q(-t).
Quasipolynomial reciprocal(const Quasipolynomial& q, int dim);

}  // namespace iop
