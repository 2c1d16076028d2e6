#include "iop/insideout.hpp"

#include <numeric>

namespace iop {

namespace {

// Both sides of n.x = o scaled by the positive lcm of all denominators.
std::pair<std::vector<std::int64_t>, std::int64_t> integral_form(const RationalVector& n,
                                                                 const Rational& o) {
  Integer l = denominator_of(o);
  for (Eigen::Index i = 0; i < n.size(); ++i) l = lcm(l, denominator_of(n(i)));
  std::vector<std::int64_t> a(static_cast<std::size_t>(n.size()));
  for (Eigen::Index i = 0; i < n.size(); ++i) a[static_cast<std::size_t>(i)] = to_int64(numerator_of(n(i) * Rational(l)));
  return {a, to_int64(numerator_of(o * Rational(l)))};
}

void require_positive(std::int64_t t) {
  if (t < 1) throw std::invalid_argument("dilation must be positive");
}

}  // namespace

InsideOutPolytope::InsideOutPolytope(Polytope p, Arrangement h) : p_(std::move(p)), h_(std::move(h)) {
  if (h_.dim() != p_.ambient_dim()) throw DimensionMismatch("arrangement and polytope dimensions differ");
  for (const auto& hp : h_.hyperplanes()) {
    auto [a, b] = integral_form(hp.normal(), hp.offset());
    forms_.push_back({std::move(a), b});
  }
}

const std::vector<RationalVector>& InsideOutPolytope::vertices() const {
  if (!vertices_) {
    std::vector<Hyperplane> candidates = p_.facet_hyperplanes();
    for (const auto& hp : h_.hyperplanes())
      if (!hp.degenerate()) candidates.push_back(hp);
    vertices_ = intersection_points(p_.affine_span(), candidates,
                                    [this](const RationalVector& x) { return p_.contains(x); });
  }
  return *vertices_;
}

Integer InsideOutPolytope::denominator() const {
  return lcm_denominators(vertices());
}

bool InsideOutPolytope::transverse() const {
  if (!transverse_) transverse_ = iop::transverse(h_, p_);
  return *transverse_;
}

const IntersectionPoset& InsideOutPolytope::poset(bool interior) const {
  auto& slot = interior ? poset_open_ : poset_closed_;
  if (!slot) slot = std::make_unique<IntersectionPoset>(build_intersection_poset(h_, p_, interior));
  return *slot;
}

const std::vector<SignVector>& InsideOutPolytope::regions() const {
  if (!regions_) regions_ = enumerate_regions(h_, &p_);
  return *regions_;
}

void InsideOutPolytope::require_nondegenerate() const {
  if (h_.contains_degenerate()) throw DegenerateArrangement();
}

SignVector InsideOutPolytope::signs_at(std::span<const std::int64_t> x, std::int64_t t) const {
  SignVector s(forms_.size());
  for (std::size_t k = 0; k < forms_.size(); ++k) {
    __int128 v = -static_cast<__int128>(t) * forms_[k].b;
    for (std::size_t i = 0; i < x.size(); ++i) v += static_cast<__int128>(forms_[k].a[i]) * x[i];
    s[k] = v > 0 ? 1 : (v < 0 ? -1 : 0);
  }
  return s;
}

const LatticeSection& InsideOutPolytope::section(std::optional<std::size_t> flat, bool interior) const {
  if (!flat) {
    if (!whole_) whole_ = std::make_unique<LatticeSection>(p_);
    return *whole_;
  }
  auto& slot = sections_[{*flat, interior}];
  if (!slot) slot = std::make_unique<LatticeSection>(p_, poset(interior).flat(*flat));
  return *slot;
}

std::int64_t InsideOutPolytope::open_count(std::int64_t t, bool interior) const {
  require_positive(t);
  std::int64_t n = 0;
  section({}, interior).for_each(t, interior, [&](std::span<const std::int64_t> x) {
    const auto s = signs_at(x, t);
    if (std::find(s.begin(), s.end(), 0) == s.end()) ++n;
  });
  return n;
}

std::int64_t InsideOutPolytope::closed_count(std::int64_t t, Multiplicity how, bool interior) const {
  require_positive(t);
  require_nondegenerate();
  if (how == Multiplicity::local && !transverse()) throw NotTransverse();
  std::int64_t n = 0;
  section({}, interior).for_each(t, interior, [&](std::span<const std::int64_t> x) {
    const auto s = signs_at(x, t);
    if (how == Multiplicity::regions) {
      auto it = closure_cache_.find(s);
      if (it == closure_cache_.end()) it = closure_cache_.emplace(s, closure_count(regions(), s)).first;
      n += it->second;
      return;
    }
    std::vector<bool> through(s.size());
    bool any = false;
    for (std::size_t k = 0; k < s.size(); ++k) any |= (through[k] = s[k] == 0);
    if (!any) {
      ++n;
      return;
    }
    auto it = local_cache_.find(through);
    if (it == local_cache_.end()) {
      Arrangement local(h_.dim());
      for (std::size_t k = 0; k < s.size(); ++k)
        if (through[k]) local.add(h_[k]);
      it = local_cache_.emplace(through, region_count(local)).first;
    }
    n += it->second;
  });
  return n;
}

std::int64_t InsideOutPolytope::count(Enumerator which, std::int64_t t) const {
  switch (which) {
    case Enumerator::closed: return closed_count(t);
    case Enumerator::open: return open_count(t, false);
    case Enumerator::open_interior: return open_count(t, true);
    case Enumerator::closed_interior: return closed_count(t, Multiplicity::regions, true);
  }
  return 0;
}

std::int64_t InsideOutPolytope::open_count_mobius(std::int64_t t, bool interior) const {
  require_positive(t);
  require_nondegenerate();
  const auto& l = poset(interior);
  std::int64_t n = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    const std::int64_t mu = l.mobius_from_bottom(i);
    if (mu != 0) n += mu * section(i, interior).count(t, interior);
  }
  return n;
}

std::int64_t InsideOutPolytope::closed_count_mobius(std::int64_t t) const {
  require_positive(t);
  require_nondegenerate();
  if (!transverse()) throw NotTransverse();
  const auto& l = poset(false);
  std::int64_t n = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    const std::int64_t mu = l.mobius_from_bottom(i);
    if (mu != 0) n += (mu < 0 ? -mu : mu) * section(i, false).count(t, false);
  }
  return n;
}

Quasipolynomial InsideOutPolytope::ehrhart(Enumerator which, std::optional<std::int64_t> period_bound) const {
  if (!p_.full_dimensional()) throw DimensionMismatch("polytope is not full-dimensional; renormalize it first");
  require_nondegenerate();
  const int d = static_cast<int>(dimension());
  const std::int64_t p = period_bound ? *period_bound : to_int64(denominator());
  auto q = interpolate([&](std::int64_t t) { return count(which, t); }, d, p);

  const Rational lead = q.coefficient(0, d);
  for (std::int64_t r = 0; r < q.period(); ++r) {
    if (q.constituent(r).degree() != d || q.coefficient(r, d) != lead)
      throw CheckFailed("constituents disagree on the leading coefficient");
  }
  if (which == Enumerator::closed && q.constant_term(0) != static_cast<std::int64_t>(regions().size()))
    throw CheckFailed("constant term differs from the number of regions");
  return q;
}

bool reciprocity_holds(const Quasipolynomial& closed, const Quasipolynomial& open, int dim) {
  return reciprocal(closed, dim) == open;
}

bool InsideOutPolytope::check_reciprocity(std::int64_t horizon) const {
  const auto closed = ehrhart(Enumerator::closed);
  const auto open = ehrhart(Enumerator::open_interior);
  if (!reciprocity_holds(closed, open, static_cast<int>(dimension()))) return false;
  for (std::int64_t t = 1; t <= horizon; ++t) {
    if (closed(t) != closed_count(t) || open(t) != open_count(t, true)) return false;
  }
  return true;
}

bool InsideOutPolytope::subleading_check() const {
  if (!transverse()) throw NotTransverse();
  const int d = static_cast<int>(dimension());
  if (d == 0) return true;
  const std::int64_t p = to_int64(denominator());
  const auto open = ehrhart(Enumerator::open_interior, p);
  const auto& whole = section({}, true);
  const auto plain = interpolate([&](std::int64_t t) { return whole.count(t, true); }, d, p);

  const auto& l = poset(true);
  std::vector<Quasipolynomial> cuts;
  for (std::size_t i = 1; i < l.size(); ++i) {
    if (l.flat(i).codim() != 1) continue;
    const auto& s = section(i, true);
    cuts.push_back(interpolate([&](std::int64_t t) { return s.count(t, true); }, d - 1, p));
  }
  for (std::int64_t r = 0; r < p; ++r) {
    Rational expected = plain.coefficient(r, d - 1);
    for (const auto& c : cuts) expected -= c.coefficient(r, d - 1);
    if (open.coefficient(r, d - 1) != expected) return false;
  }
  return true;
}

Renormalized renormalize(const InsideOutPolytope& iop) {
  const Polytope& p = iop.polytope();
  const LatticeFrame frame = lattice_frame(p.affine_span());
  const std::int64_t scale = to_int64(frame.period);
  const Eigen::Index k = frame.basis.cols();
  const RationalMatrix basis = frame.basis.cast<Rational>();
  const RationalVector anchor = frame.anchor.cast<Rational>();

  std::vector<Halfspace> halfspaces;
  for (std::size_t i = 0; i < p.halfspaces().size(); ++i) {
    const auto& hs = p.halfspaces()[i];
    RationalVector a = (hs.normal.transpose() * basis).transpose();
    if (p.implicit()[i] || a.isZero()) continue;
    halfspaces.push_back({a, Rational(scale) * hs.offset - hs.normal.dot(anchor)});
  }
  Arrangement h(k);
  for (const auto& hp : iop.arrangement().hyperplanes()) {
    if (hp.degenerate()) {
      h.add(Hyperplane::degenerate(k));
      continue;
    }
    RationalVector n = (hp.normal().transpose() * basis).transpose();
    const Rational o = Rational(scale) * hp.offset() - hp.normal().dot(anchor);
    if (n.isZero()) {
      if (o == 0) h.add(Hyperplane::degenerate(k));
      continue;
    }
    h.add(Hyperplane(n, o));
  }
  return {InsideOutPolytope(Polytope(k, std::move(halfspaces)), std::move(h)), scale, frame.anchor, frame.basis};
}

}  // namespace iop
