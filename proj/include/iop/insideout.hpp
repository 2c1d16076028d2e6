#pragma once

// A polytope together with a hyperplane arrangement: lattice-point counts
// that avoid or weight the hyperplanes, and their Ehrhart quasipolynomials.

#include "iop/arrangement.hpp"
#include "iop/quasipoly.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace iop {

enum class Enumerator {
  closed,           // points of tP, each weighted by its number of closed regions
  open,             // points of tP on no hyperplane
  open_interior,    // points of tP° on no hyperplane
  closed_interior,  // points of tP°, weighted as in `closed`
};

/// How a closed count weights a lattice point.
enum class Multiplicity {
  regions,  // closed regions of (P, H) whose closure holds the point
  local,    // region count of the hyperplanes through the point; needs transversality
};

class InsideOutPolytope {
 public:
  InsideOutPolytope(Polytope p, Arrangement h);

  const Polytope& polytope() const { return p_; }
  const Arrangement& arrangement() const { return h_; }
  Eigen::Index dimension() const { return p_.dimension(); }

  /// Points of P cut out by hyperplanes of H together with facet hyperplanes.
  const std::vector<RationalVector>& vertices() const;
  Integer denominator() const;
  bool transverse() const;
  /// L(P, H) or, with `interior`, L(P°, H).
  const IntersectionPoset& poset(bool interior) const;
  /// Sign vectors of the regions of P° minus the hyperplanes.
  const std::vector<SignVector>& regions() const;

  std::int64_t open_count(std::int64_t t, bool interior = false) const;
  /// Throws NotTransverse for Multiplicity::local without transversality.
  std::int64_t closed_count(std::int64_t t, Multiplicity how = Multiplicity::regions,
                            bool interior = false) const;
  std::int64_t count(Enumerator which, std::int64_t t) const;

  /// Sum of mu(0, u) over L(P°, H) (or L(P, H)) of lattice points in t(P° meet u).
  std::int64_t open_count_mobius(std::int64_t t, bool interior = true) const;
  /// Sum of |mu(0, u)| over L(P, H); throws NotTransverse.
  std::int64_t closed_count_mobius(std::int64_t t) const;

  /// Interpolated with degree bound dim P and the denominator as period bound
  /// unless one is given. Requires a full-dimensional P and nondegenerate H.
  Quasipolynomial ehrhart(Enumerator which, std::optional<std::int64_t> period_bound = {}) const;

  /// Closed and interior-open quasipolynomials are reciprocal, and both
  /// reproduce direct counts for t = 1..horizon.
  bool check_reciprocity(std::int64_t horizon) const;

  /// Second coefficient of the interior-open quasipolynomial equals that of
  /// the plain interior count minus, per residue, the top coefficients of the
  /// codimension-one sections. Throws NotTransverse.
  bool subleading_check() const;

 private:
  struct IntForm {
    std::vector<std::int64_t> a;
    std::int64_t b;
  };
  SignVector signs_at(std::span<const std::int64_t> x, std::int64_t t) const;
  const LatticeSection& section(std::optional<std::size_t> flat, bool interior) const;
  void require_nondegenerate() const;

  Polytope p_;
  Arrangement h_;
  std::vector<IntForm> forms_;

  mutable std::optional<std::vector<RationalVector>> vertices_;
  mutable std::optional<bool> transverse_;
  mutable std::unique_ptr<IntersectionPoset> poset_closed_, poset_open_;
  mutable std::optional<std::vector<SignVector>> regions_;
  mutable std::map<SignVector, std::int64_t> closure_cache_;
  mutable std::map<std::vector<bool>, std::int64_t> local_cache_;
  mutable std::map<std::pair<std::size_t, bool>, std::unique_ptr<LatticeSection>> sections_;
  mutable std::unique_ptr<LatticeSection> whole_;
};

/// True iff reciprocal(closed, dim) == open.
bool reciprocity_holds(const Quasipolynomial& closed, const Quasipolynomial& open, int dim);

/// P written in lattice coordinates of its affine span and dilated by the
/// span's lattice period p: E(P)(p t) = E(Q)(t), and counts of P vanish when p
/// does not divide t. x = t * anchor + basis * y for y in tQ.
struct Renormalized {
  InsideOutPolytope iop;
  std::int64_t scale;
  VectorX<Integer> anchor;
  MatrixX<Integer> basis;
};

Renormalized renormalize(const InsideOutPolytope& iop);

}  // namespace iop
