#pragma once

// Arrangements of affine subspaces of arbitrary dimension, with the
// algebraic multiplicity (which may be negative) in place of region counts.

#include "iop/insideout.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace iop {

class SubspaceArrangement {
 public:
  explicit SubspaceArrangement(Eigen::Index dim, const std::vector<Flat>& subspaces = {});
  static SubspaceArrangement from_hyperplanes(const Arrangement& h);

  Eigen::Index dim() const { return dim_; }
  std::size_t size() const { return subspaces_.size(); }
  const std::vector<Flat>& subspaces() const { return subspaces_; }
  const Flat& operator[](std::size_t i) const { return subspaces_[i]; }
  /// Throws DegenerateArrangement for the whole space; false for a duplicate.
  bool add(const Flat& s);

 private:
  Eigen::Index dim_;
  std::vector<Flat> subspaces_;
};

IntersectionPoset subspace_poset(const SubspaceArrangement& a);
/// rho(u) = codim u for every element of the poset.
std::vector<int> extrinsic_ranks(const IntersectionPoset& l);

/// sum over u containing x of mu(0, u) (-1)^codim u when x is in C, else 0.
std::int64_t subspace_multiplicity(const SubspaceArrangement& a, const Polytope& c, const RationalVector& x);
/// Same, with L(A) already built.
std::int64_t subspace_multiplicity(const IntersectionPoset& l, const Polytope& c, const RationalVector& x);

class SubspaceInsideOut {
 public:
  SubspaceInsideOut(Polytope p, SubspaceArrangement a);

  const Polytope& polytope() const { return p_; }
  const SubspaceArrangement& arrangement() const { return a_; }
  const IntersectionPoset& poset() const { return poset_; }

  /// Points of P cut out by a flat of L(A) together with facet hyperplanes.
  const std::vector<RationalVector>& vertices() const;
  Integer denominator() const;
  /// Every flat meeting P meets relint P, and no subspace contains P.
  bool transverse() const;

  std::int64_t open_count(std::int64_t t, bool interior = false) const;
  /// Multiplicity-weighted count over tP (or tP°).
  std::int64_t closed_count(std::int64_t t, bool interior = false) const;
  std::int64_t count(Enumerator which, std::int64_t t) const;

  /// Throw NotTransverse.
  std::int64_t open_count_mobius(std::int64_t t, bool interior = false) const;
  std::int64_t closed_count_mobius(std::int64_t t) const;

  Quasipolynomial ehrhart(Enumerator which, std::optional<std::int64_t> period_bound = {}) const;
  /// The interior-open quasipolynomial is the reciprocal of the closed one and
  /// both reproduce direct counts up to `horizon`. Throws NotTransverse.
  bool check_reciprocity(std::int64_t horizon) const;

 private:
  struct IntSystem {
    std::vector<std::vector<std::int64_t>> a;
    std::vector<std::int64_t> b;
  };
  std::vector<bool> through(std::span<const std::int64_t> x, std::int64_t t) const;
  std::int64_t weight(std::span<const std::int64_t> x, std::int64_t t) const;
  const LatticeSection& section(std::optional<std::size_t> flat) const;

  Polytope p_;
  SubspaceArrangement a_;
  IntersectionPoset poset_;
  std::vector<IntSystem> systems_;

  mutable std::optional<std::vector<RationalVector>> vertices_;
  mutable std::optional<bool> transverse_;
  mutable std::map<std::vector<bool>, std::int64_t> weight_cache_;
  mutable std::map<std::size_t, std::unique_ptr<LatticeSection>> sections_;
  mutable std::unique_ptr<LatticeSection> whole_;
};

}  // namespace iop
