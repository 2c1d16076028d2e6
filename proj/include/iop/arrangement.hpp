#pragma once

// Hyperplane arrangements and their intersection posets.

#include "iop/geometry.hpp"
#include "iop/polynomial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace iop {

/// A finite set of hyperplanes in R^d. Duplicates are dropped on insertion
/// (first occurrence wins); the degenerate hyperplane may be present.
class Arrangement {
 public:
  explicit Arrangement(Eigen::Index dim, const std::vector<Hyperplane>& hyperplanes = {});

  Eigen::Index dim() const { return dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  bool empty() const { return hyperplanes_.empty(); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }
  bool contains_degenerate() const { return contains_degenerate_; }

  /// Returns false when h was already present.
  bool add(const Hyperplane& h);
  Arrangement merged(const Arrangement& other) const;
  /// The hyperplanes containing x, i.e. H(x).
  Arrangement through(const RationalVector& x) const;

 private:
  Eigen::Index dim_;
  std::vector<Hyperplane> hyperplanes_;
  bool contains_degenerate_ = false;
};

/// -1, 0, +1 per hyperplane: the side of each hyperplane a point lies on.
using SignVector = std::vector<std::int8_t>;

SignVector sign_vector(const Arrangement& h, const RationalVector& x);

/// Nonempty intersections of a generating family of flats, ordered by reverse
/// inclusion. Index 0 is the bottom element (the ambient space); flats are
/// sorted by decreasing dimension, so r <= s implies index(r) <= index(s).
class IntersectionPoset {
 public:
  /// Closure of `generators` under nonempty intersection.
  static IntersectionPoset from_generators(Eigen::Index dim, const std::vector<Flat>& generators);

  std::size_t size() const { return flats_.size(); }
  const std::vector<Flat>& flats() const { return flats_; }
  const Flat& flat(std::size_t i) const { return flats_[i]; }
  const std::vector<Flat>& generators() const { return generators_; }
  std::optional<std::size_t> index_of(const Flat& f) const;

  /// containing(i)[g]: generator g contains flat i
  const std::vector<bool>& containing(std::size_t i) const { return masks_[i]; }
  /// r <= s in reverse inclusion, i.e. flat s is a subset of flat r.
  bool leq(std::size_t r, std::size_t s) const;

  std::int64_t mobius_from_bottom(std::size_t i) const { return mobius_bottom_[i]; }
  std::int64_t mobius(std::size_t r, std::size_t s) const;
  /// Throws FlatNotInPoset.
  std::int64_t mobius(const Flat& r, const Flat& s) const;

  /// Keeps only flats meeting P (or relint P when `open`). The result is a
  /// lower order ideal, so Mobius values from the bottom are unchanged.
  IntersectionPoset restricted(const Polytope& p, bool open) const;

 private:
  IntersectionPoset() = default;
  void finish();

  std::vector<Flat> generators_;
  std::vector<Flat> flats_;
  std::vector<std::vector<bool>> masks_;
  std::vector<std::int64_t> mobius_bottom_;
  std::map<Flat, std::size_t> index_;
};

/// Throws DegenerateArrangement.
IntersectionPoset build_intersection_poset(const Arrangement& h);
IntersectionPoset build_intersection_poset(const Arrangement& h, const Polytope& restrict_to,
                                           bool open_restriction);

/// sum over flats of mu(0,s) lambda^dim s; zero when H contains the degenerate hyperplane.
Polynomial characteristic_polynomial(const Arrangement& h);

/// (-1)^d p_H(-1); zero when degenerate.
std::int64_t region_count(const Arrangement& h);

/// Sign vectors (no zero entries) of the open regions of H, or of H inside
/// relint(P) when `within` is given. Depth-first over the hyperplanes,
/// pruning each partial sign pattern by exact feasibility.
std::vector<SignVector> enumerate_regions(const Arrangement& h,
                                          const Polytope* within = nullptr);
/// Regions of the arrangement restricted to an arbitrary base system (used for
/// induced arrangements, where the base pins points to a flat).
std::vector<SignVector> enumerate_regions(const Arrangement& h, const ConstraintSystem& base);

/// Number of regions whose weak closure contains a point with sign vector `s`.
std::int64_t closure_count(const std::vector<SignVector>& regions, const SignVector& s);

/// Number of closed regions of H containing x, computed as the region count of H(x).
std::int64_t multiplicity(const Arrangement& h, const RationalVector& x);

/// Every flat meeting P also meets relint(P), and P lies in no hyperplane.
bool transverse(const Arrangement& h, const Polytope& p);

/// H^s = {h meet s : h in H, h not containing s}, written in the coordinates
/// y of the parametrization x = base + basis * y of s.
struct InducedArrangement {
  Flat flat;
  RationalVector base;
  RationalMatrix basis;
  Arrangement arrangement;
};

InducedArrangement induced_arrangement(const Arrangement& h, const Flat& s);

}  // namespace iop
