#include "iop/subspace.hpp"

namespace iop {

SubspaceArrangement::SubspaceArrangement(Eigen::Index dim, const std::vector<Flat>& subspaces) : dim_(dim) {
  for (const auto& s : subspaces) add(s);
}

SubspaceArrangement SubspaceArrangement::from_hyperplanes(const Arrangement& h) {
  SubspaceArrangement a(h.dim());
  for (const auto& hp : h.hyperplanes()) a.add(hp.as_flat());
  return a;
}

bool SubspaceArrangement::add(const Flat& s) {
  if (s.ambient_dim() != dim_) throw DimensionMismatch("subspace lives in a different dimension");
  if (s.codim() == 0) throw DegenerateArrangement();
  if (std::find(subspaces_.begin(), subspaces_.end(), s) != subspaces_.end()) return false;
  subspaces_.push_back(s);
  return true;
}

IntersectionPoset subspace_poset(const SubspaceArrangement& a) {
  return IntersectionPoset::from_generators(a.dim(), a.subspaces());
}

std::vector<int> extrinsic_ranks(const IntersectionPoset& l) {
  std::vector<int> out;
  for (const auto& f : l.flats()) out.push_back(static_cast<int>(f.codim()));
  return out;
}

std::int64_t subspace_multiplicity(const SubspaceArrangement& a, const Polytope& c, const RationalVector& x) {
  return subspace_multiplicity(subspace_poset(a), c, x);
}

std::int64_t subspace_multiplicity(const IntersectionPoset& l, const Polytope& c, const RationalVector& x) {
  if (!c.contains(x)) return 0;
  std::int64_t m = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l.flat(i).contains(x)) m += l.mobius_from_bottom(i) * (l.flat(i).codim() % 2 ? -1 : 1);
  }
  return m;
}

SubspaceInsideOut::SubspaceInsideOut(Polytope p, SubspaceArrangement a)
    : p_(std::move(p)), a_(std::move(a)), poset_(subspace_poset(a_)) {
  if (a_.dim() != p_.ambient_dim()) throw DimensionMismatch("arrangement and polytope dimensions differ");
  for (const auto& s : a_.subspaces()) {
    IntSystem sys;
    for (Eigen::Index r = 0; r < s.codim(); ++r) {
      RationalVector row(s.ambient_dim() + 1);
      row.head(s.ambient_dim()) = s.equations().row(r).transpose();
      row(s.ambient_dim()) = s.rhs()(r);
      auto ints = clear_denominators(row);
      std::vector<std::int64_t> coeffs;
      for (Eigen::Index i = 0; i < s.ambient_dim(); ++i) coeffs.push_back(to_int64(ints[static_cast<std::size_t>(i)]));
      sys.a.push_back(std::move(coeffs));
      sys.b.push_back(to_int64(ints.back()));
    }
    systems_.push_back(std::move(sys));
  }
}

const std::vector<RationalVector>& SubspaceInsideOut::vertices() const {
  if (!vertices_) {
    const auto facets = p_.facet_hyperplanes();
    std::vector<RationalVector> all;
    for (const auto& u : poset_.flats()) {
      const auto fixed = p_.affine_span().intersect(u);
      if (!fixed) continue;
      const auto pts = intersection_points(*fixed, facets, [this](const RationalVector& x) { return p_.contains(x); });
      all.insert(all.end(), pts.begin(), pts.end());
    }
    std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return lex_less(x, y); });
    all.erase(std::unique(all.begin(), all.end(), [](const auto& x, const auto& y) { return same(x, y); }), all.end());
    vertices_ = std::move(all);
  }
  return *vertices_;
}

Integer SubspaceInsideOut::denominator() const { return lcm_denominators(vertices()); }

bool SubspaceInsideOut::transverse() const {
  if (!transverse_) {
    bool ok = true;
    for (const auto& s : a_.subspaces()) {
      ok = ok && !std::all_of(p_.vertices().begin(), p_.vertices().end(),
                              [&](const RationalVector& v) { return s.contains(v); });
    }
    const ConstraintSystem closed = p_.closed_system(), open = p_.relative_interior_system();
    for (std::size_t i = 1; ok && i < poset_.size(); ++i) {
      ConstraintSystem meets = closed;
      poset_.flat(i).add_to(meets);
      if (!feasible(meets)) continue;
      ConstraintSystem meets_interior = open;
      poset_.flat(i).add_to(meets_interior);
      ok = feasible(meets_interior);
    }
    transverse_ = ok;
  }
  return *transverse_;
}

const LatticeSection& SubspaceInsideOut::section(std::optional<std::size_t> flat) const {
  if (!flat) {
    if (!whole_) whole_ = std::make_unique<LatticeSection>(p_);
    return *whole_;
  }
  auto& slot = sections_[*flat];
  if (!slot) slot = std::make_unique<LatticeSection>(p_, poset_.flat(*flat));
  return *slot;
}

std::vector<bool> SubspaceInsideOut::through(std::span<const std::int64_t> x, std::int64_t t) const {
  std::vector<bool> on(systems_.size());
  for (std::size_t k = 0; k < systems_.size(); ++k) {
    bool inside = true;
    for (std::size_t r = 0; inside && r < systems_[k].a.size(); ++r) {
      __int128 v = -static_cast<__int128>(t) * systems_[k].b[r];
      for (std::size_t i = 0; i < x.size(); ++i) v += static_cast<__int128>(systems_[k].a[r][i]) * x[i];
      inside = v == 0;
    }
    on[k] = inside;
  }
  return on;
}

// Multiplicity of the point x / t: flat u holds it iff every subspace
// containing u does, so the answer depends only on the set of subspaces
// through the point.
std::int64_t SubspaceInsideOut::weight(std::span<const std::int64_t> x, std::int64_t t) const {
  const auto on = through(x, t);
  const bool any = std::find(on.begin(), on.end(), true) != on.end();
  if (!any) return 1;
  auto it = weight_cache_.find(on);
  if (it == weight_cache_.end()) {
    std::int64_t m = 0;
    for (std::size_t i = 0; i < poset_.size(); ++i) {
      const auto& mask = poset_.containing(i);
      bool holds = true;
      for (std::size_t k = 0; holds && k < mask.size(); ++k) holds = !mask[k] || on[k];
      if (holds) m += poset_.mobius_from_bottom(i) * (poset_.flat(i).codim() % 2 ? -1 : 1);
    }
    it = weight_cache_.emplace(on, m).first;
  }
  return it->second;
}

std::int64_t SubspaceInsideOut::open_count(std::int64_t t, bool interior) const {
  if (t < 1) throw std::invalid_argument("dilation must be positive");
  std::int64_t n = 0;
  section({}).for_each(t, interior, [&](std::span<const std::int64_t> x) {
    const auto on = through(x, t);
    n += std::find(on.begin(), on.end(), true) == on.end();
  });
  return n;
}

std::int64_t SubspaceInsideOut::closed_count(std::int64_t t, bool interior) const {
  if (t < 1) throw std::invalid_argument("dilation must be positive");
  std::int64_t n = 0;
  section({}).for_each(t, interior, [&](std::span<const std::int64_t> x) { n += weight(x, t); });
  return n;
}

std::int64_t SubspaceInsideOut::count(Enumerator which, std::int64_t t) const {
  switch (which) {
    case Enumerator::closed: return closed_count(t);
    case Enumerator::open: return open_count(t, false);
    case Enumerator::open_interior: return open_count(t, true);
    case Enumerator::closed_interior: return closed_count(t, true);
  }
  return 0;
}

std::int64_t SubspaceInsideOut::open_count_mobius(std::int64_t t, bool interior) const {
  if (t < 1) throw std::invalid_argument("dilation must be positive");
  if (!transverse()) throw NotTransverse();
  std::int64_t n = 0;
  for (std::size_t i = 0; i < poset_.size(); ++i) {
    const std::int64_t mu = poset_.mobius_from_bottom(i);
    if (mu != 0) n += mu * section(i).count(t, interior);
  }
  return n;
}

std::int64_t SubspaceInsideOut::closed_count_mobius(std::int64_t t) const {
  if (t < 1) throw std::invalid_argument("dilation must be positive");
  if (!transverse()) throw NotTransverse();
  std::int64_t n = 0;
  for (std::size_t i = 0; i < poset_.size(); ++i) {
    const std::int64_t mu = poset_.mobius_from_bottom(i);
    if (mu != 0) n += mu * (poset_.flat(i).codim() % 2 ? -1 : 1) * section(i).count(t, false);
  }
  return n;
}

Quasipolynomial SubspaceInsideOut::ehrhart(Enumerator which, std::optional<std::int64_t> period_bound) const {
  if (!p_.full_dimensional()) throw DimensionMismatch("polytope is not full-dimensional");
  const int d = static_cast<int>(p_.dimension());
  const std::int64_t p = period_bound ? *period_bound : to_int64(denominator());
  auto q = interpolate([&](std::int64_t t) { return count(which, t); }, d, p);
  const Rational lead = q.coefficient(0, d);
  for (std::int64_t r = 0; r < q.period(); ++r) {
    if (q.constituent(r).degree() != d || q.coefficient(r, d) != lead)
      throw CheckFailed("constituents disagree on the leading coefficient");
  }
  return q;
}

bool SubspaceInsideOut::check_reciprocity(std::int64_t horizon) const {
  if (!transverse()) throw NotTransverse();
  const auto closed = ehrhart(Enumerator::closed);
  const auto open = ehrhart(Enumerator::open_interior);
  if (!reciprocity_holds(closed, open, static_cast<int>(p_.dimension()))) return false;
  for (std::int64_t t = 1; t <= horizon; ++t) {
    if (closed(t) != closed_count(t) || open(t) != open_count(t, true)) return false;
  }
  return true;
}

}  // namespace iop
