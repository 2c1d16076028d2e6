#pragma once

// Hyperplanes, flats, rational H-polytopes, exact feasibility, vertices and
// lattice points. All coordinates are exact rationals.

#include "iop/errors.hpp"
#include "iop/linalg.hpp"
#include "iop/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace iop {

enum class Relation { less_equal, less, equal };

/// normal . x  (<= | < | =)  offset
struct LinearConstraint {
  RationalVector normal;
  Rational offset;
  Relation relation = Relation::less_equal;
};

class ConstraintSystem {
 public:
  explicit ConstraintSystem(Eigen::Index dim) : dim_(dim) {}

  Eigen::Index dim() const { return dim_; }
  const std::vector<LinearConstraint>& constraints() const { return rows_; }

  ConstraintSystem& add(RationalVector normal, Rational offset, Relation relation);
  ConstraintSystem& add_weak(RationalVector normal, Rational offset) {
    return add(std::move(normal), std::move(offset), Relation::less_equal);
  }
  ConstraintSystem& add_strict(RationalVector normal, Rational offset) {
    return add(std::move(normal), std::move(offset), Relation::less);
  }
  ConstraintSystem& add_equation(RationalVector normal, Rational offset) {
    return add(std::move(normal), std::move(offset), Relation::equal);
  }
  ConstraintSystem& append(const ConstraintSystem& other);

  bool satisfied_by(const RationalVector& x) const;

 private:
  Eigen::Index dim_;
  std::vector<LinearConstraint> rows_;
};

/// True iff some rational point satisfies every constraint. Equations are
/// eliminated by substitution, then Fourier-Motzkin elimination runs on the
/// inequalities, carrying strictness through each combination.
bool feasible(const ConstraintSystem& system);

class Flat;

/// {x : normal . x = offset}. A zero normal with zero offset is the
/// degenerate hyperplane (the whole space). Stored scaled so the first
/// nonzero normal entry is 1, which makes equality structural.
class Hyperplane {
 public:
  Hyperplane(RationalVector normal, Rational offset);
  static Hyperplane degenerate(Eigen::Index dim);

  Eigen::Index dim() const { return normal_.size(); }
  bool degenerate() const { return degenerate_; }
  const RationalVector& normal() const { return normal_; }
  const Rational& offset() const { return offset_; }

  /// normal . x - offset
  Rational evaluate(const RationalVector& x) const;
  bool contains(const RationalVector& x) const { return evaluate(x) == 0; }
  Flat as_flat() const;

  friend bool operator==(const Hyperplane& a, const Hyperplane& b);
  friend bool operator<(const Hyperplane& a, const Hyperplane& b);

 private:
  RationalVector normal_;
  Rational offset_;
  bool degenerate_ = false;
};

/// A nonempty affine subspace held as the RREF of its defining system, so
/// two flats are equal iff their stored systems are identical.
class Flat {
 public:
  static Flat ambient(Eigen::Index dim);
  static Flat point(const RationalVector& x);
  /// Returns nullopt when the system is inconsistent.
  static std::optional<Flat> from_equations(const RationalMatrix& a, const RationalVector& b);

  Eigen::Index ambient_dim() const { return ambient_dim_; }
  Eigen::Index dim() const { return ambient_dim_ - equations_.rows(); }
  Eigen::Index codim() const { return equations_.rows(); }
  const RationalMatrix& equations() const { return equations_; }
  const RationalVector& rhs() const { return rhs_; }

  bool contains(const RationalVector& x) const;
  /// other is a subset of *this
  bool contains(const Flat& other) const;
  std::optional<Flat> intersect(const Flat& other) const;
  std::optional<Flat> intersect(const Hyperplane& h) const;

  /// base point plus direction basis (columns)
  AffineSolution<Rational> parametrization() const;
  void add_to(ConstraintSystem& system) const;

  friend bool operator==(const Flat& a, const Flat& b) {
    return a.ambient_dim_ == b.ambient_dim_ && same(a.equations_, b.equations_) &&
           same(a.rhs_, b.rhs_);
  }
  friend bool operator<(const Flat& a, const Flat& b);

 private:
  Flat(Eigen::Index ambient_dim, RationalMatrix equations, RationalVector rhs)
      : ambient_dim_(ambient_dim), equations_(std::move(equations)), rhs_(std::move(rhs)) {}

  Eigen::Index ambient_dim_ = 0;
  RationalMatrix equations_;
  RationalVector rhs_;
};

/// normal . x <= offset
struct Halfspace {
  RationalVector normal;
  Rational offset;
};

/// Bounded, nonempty rational polytope in H-representation. Vertices,
/// implicit equalities and the affine span are computed once on construction.
class Polytope {
 public:
  /// Throws EmptyPolytope or UnboundedPolytope.
  Polytope(Eigen::Index dim, std::vector<Halfspace> halfspaces,
           std::vector<Hyperplane> equations = {});

  static Polytope cube(Eigen::Index dim);
  static Polytope box(const RationalVector& lower, const RationalVector& upper);
  /// conv(e_1, ..., e_n) = {x >= 0, sum x = 1}
  static Polytope standard_simplex(Eigen::Index n);

  Eigen::Index ambient_dim() const { return dim_; }
  /// Dimension of the affine span.
  Eigen::Index dimension() const { return span_.dim(); }
  bool full_dimensional() const { return dimension() == dim_; }

  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  const std::vector<Hyperplane>& equations() const { return equations_; }
  /// implicit()[i]: halfspace i is tight on all of P
  const std::vector<bool>& implicit() const { return implicit_; }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const Flat& affine_span() const { return span_; }

  /// Boundary hyperplanes of the non-implicit halfspaces, deduplicated.
  std::vector<Hyperplane> facet_hyperplanes() const;

  ConstraintSystem closed_system() const;
  ConstraintSystem relative_interior_system() const;
  bool contains(const RationalVector& x) const;
  bool relative_interior_contains(const RationalVector& x) const;

 private:
  Eigen::Index dim_;
  std::vector<Halfspace> halfspaces_;
  std::vector<Hyperplane> equations_;
  std::vector<bool> implicit_;
  std::vector<RationalVector> vertices_;
  Flat span_ = Flat::ambient(0);
};

/// Every point that is the unique solution of `fixed` together with some
/// subset of `candidates`, filtered by `keep`; deduplicated and sorted.
std::vector<RationalVector> intersection_points(
    const Flat& fixed, std::span<const Hyperplane> candidates,
    const std::function<bool(const RationalVector&)>& keep);

std::vector<RationalVector> polytope_vertices(const Polytope& p);
Flat affine_span(const Polytope& p);
Flat affine_span(std::span<const RationalVector> points);

/// Integer parametrization of an affine subspace: for the smallest p >= 1
/// with p^-1 Z^d meeting s, `anchor` is an integer point of p*s and the
/// columns of `basis` are a lattice basis of Z^d intersected with the
/// direction space of s.
struct LatticeFrame {
  Integer period;
  VectorX<Integer> anchor;
  MatrixX<Integer> basis;
};

LatticeFrame lattice_frame(const Flat& s);
Integer lattice_period(const Flat& s);

/// Lattice points of t*P (closed) or t*relint(P), optionally restricted to the
/// dilated flat t*u. Built once per (P, u) and reused for every dilation:
/// points are scanned in the lattice coordinates of the section's affine span
/// over an exact bounding box, then filtered exactly.
class LatticeSection {
 public:
  explicit LatticeSection(const Polytope& p, const std::optional<Flat>& flat = std::nullopt);

  bool empty() const { return empty_; }
  /// Lattice period of the section's affine span; counts vanish off its multiples.
  std::int64_t period() const { return period_; }
  Eigen::Index ambient_dim() const { return ambient_dim_; }

  std::int64_t count(std::int64_t t, bool open) const;
  /// fn(std::span<const std::int64_t> x) for each integer point x.
  void for_each(std::int64_t t, bool open,
                const std::function<void(std::span<const std::int64_t>)>& fn) const;

 private:
  template <typename Visit>
  void scan(std::int64_t t, bool open, Visit&& visit) const;

  struct Row {
    std::vector<std::int64_t> coeff;  // in section coordinates
    std::int64_t rhs;                 // per unit of t / period
  };

  Eigen::Index ambient_dim_ = 0;
  Eigen::Index dim_ = 0;  // section lattice rank
  bool empty_ = true;
  bool open_ok_ = true;
  std::int64_t period_ = 1;
  std::vector<std::int64_t> anchor_;
  std::vector<std::vector<std::int64_t>> basis_;  // ambient_dim rows x dim cols
  std::vector<Row> rows_;
  std::vector<Rational> lower_, upper_;  // unit bounding box in section coords
};

/// Number of integer points in t*X with X = P or relint(P), intersected with t*flat.
std::int64_t integer_points(const Polytope& p, bool open, const std::optional<Flat>& flat,
                            std::int64_t t);
std::vector<std::vector<std::int64_t>> list_integer_points(const Polytope& p, bool open,
                                                           const std::optional<Flat>& flat,
                                                           std::int64_t t);

}  // namespace iop
