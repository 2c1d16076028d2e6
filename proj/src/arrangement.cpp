#include "iop/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace iop {

// ---------------------------------------------------------------- arrangement

Arrangement::Arrangement(Eigen::Index dim, const std::vector<Hyperplane>& hyperplanes) : dim_(dim) {
  for (const auto& h : hyperplanes) add(h);
}

bool Arrangement::add(const Hyperplane& h) {
  if (h.dim() != dim_) throw DimensionMismatch("hyperplane dimension mismatch");
  if (std::find(hyperplanes_.begin(), hyperplanes_.end(), h) != hyperplanes_.end()) return false;
  hyperplanes_.push_back(h);
  contains_degenerate_ = contains_degenerate_ || h.degenerate();
  return true;
}

Arrangement Arrangement::merged(const Arrangement& other) const {
  Arrangement out = *this;
  for (const auto& h : other.hyperplanes_) out.add(h);
  return out;
}

Arrangement Arrangement::through(const RationalVector& x) const {
  Arrangement out(dim_);
  for (const auto& h : hyperplanes_) {
    if (h.contains(x)) out.add(h);
  }
  return out;
}

SignVector sign_vector(const Arrangement& h, const RationalVector& x) {
  SignVector s;
  s.reserve(h.size());
  for (const auto& hp : h.hyperplanes()) s.push_back(static_cast<std::int8_t>(sign(hp.evaluate(x))));
  return s;
}

// ---------------------------------------------------------------------- poset

IntersectionPoset IntersectionPoset::from_generators(Eigen::Index dim,
                                                     const std::vector<Flat>& generators) {
  IntersectionPoset poset;
  poset.generators_ = generators;
  std::map<Flat, bool> seen;
  std::deque<Flat> queue{Flat::ambient(dim)};
  seen.emplace(queue.front(), true);
  std::vector<Flat> found;
  while (!queue.empty()) {
    Flat f = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      if (g.contains(f)) continue;
      auto meet = f.intersect(g);
      if (!meet) continue;
      if (seen.emplace(*meet, true).second) queue.push_back(*meet);
    }
    found.push_back(std::move(f));
  }
  std::stable_sort(found.begin(), found.end(), [](const Flat& a, const Flat& b) {
    if (a.dim() != b.dim()) return a.dim() > b.dim();
    return a < b;
  });
  poset.flats_ = std::move(found);
  poset.finish();
  return poset;
}

void IntersectionPoset::finish() {
  index_.clear();
  masks_.clear();
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    index_.emplace(flats_[i], i);
    std::vector<bool> mask(generators_.size());
    for (std::size_t g = 0; g < generators_.size(); ++g) mask[g] = generators_[g].contains(flats_[i]);
    masks_.push_back(std::move(mask));
  }
  mobius_bottom_.assign(flats_.size(), 0);
  for (std::size_t s = 0; s < flats_.size(); ++s) {
    if (s == 0) {
      mobius_bottom_[s] = 1;
      continue;
    }
    std::int64_t acc = 0;
    for (std::size_t u = 0; u < s; ++u) {
      if (leq(u, s)) acc += mobius_bottom_[u];
    }
    mobius_bottom_[s] = -acc;
  }
}

std::optional<std::size_t> IntersectionPoset::index_of(const Flat& f) const {
  const auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool IntersectionPoset::leq(std::size_t r, std::size_t s) const {
  if (r == s) return true;
  const auto& a = masks_[r];
  const auto& b = masks_[s];
  for (std::size_t g = 0; g < a.size(); ++g) {
    if (a[g] && !b[g]) return false;
  }
  return flats_[r].dim() > flats_[s].dim();
}

std::int64_t IntersectionPoset::mobius(std::size_t r, std::size_t s) const {
  if (!leq(r, s)) return 0;
  if (r == 0) return mobius_bottom_[s];
  // Interval [r, s] in index order; indices are a linear extension.
  std::vector<std::size_t> interval;
  for (std::size_t u = r; u <= s; ++u) {
    if (leq(r, u) && leq(u, s)) interval.push_back(u);
  }
  std::vector<std::int64_t> mu(interval.size(), 0);
  for (std::size_t k = 0; k < interval.size(); ++k) {
    if (k == 0) {
      mu[k] = 1;
      continue;
    }
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (leq(interval[j], interval[k])) acc += mu[j];
    }
    mu[k] = -acc;
  }
  return mu.back();
}

std::int64_t IntersectionPoset::mobius(const Flat& r, const Flat& s) const {
  const auto ri = index_of(r), si = index_of(s);
  if (!ri || !si) throw FlatNotInPoset();
  return mobius(*ri, *si);
}

IntersectionPoset IntersectionPoset::restricted(const Polytope& p, bool open) const {
  const ConstraintSystem base = open ? p.relative_interior_system() : p.closed_system();
  IntersectionPoset out;
  out.generators_ = generators_;
  for (const auto& f : flats_) {
    ConstraintSystem s = base;
    f.add_to(s);
    if (feasible(s)) out.flats_.push_back(f);
  }
  out.finish();
  return out;
}

namespace {

std::vector<Flat> hyperplane_flats(const Arrangement& h) {
  if (h.contains_degenerate()) throw DegenerateArrangement();
  std::vector<Flat> out;
  out.reserve(h.size());
  for (const auto& hp : h.hyperplanes()) out.push_back(hp.as_flat());
  return out;
}

}  // namespace

IntersectionPoset build_intersection_poset(const Arrangement& h) {
  return IntersectionPoset::from_generators(h.dim(), hyperplane_flats(h));
}

IntersectionPoset build_intersection_poset(const Arrangement& h, const Polytope& restrict_to,
                                           bool open_restriction) {
  return build_intersection_poset(h).restricted(restrict_to, open_restriction);
}

Polynomial characteristic_polynomial(const Arrangement& h) {
  if (h.contains_degenerate()) return {};
  const auto poset = build_intersection_poset(h);
  Polynomial p;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    p += Polynomial::monomial(static_cast<int>(poset.flat(i).dim()), poset.mobius_from_bottom(i));
  }
  return p;
}

std::int64_t region_count(const Arrangement& h) {
  if (h.contains_degenerate()) return 0;
  Rational v = characteristic_polynomial(h)(Rational(-1));
  if (h.dim() % 2) v = -v;
  return to_int64(v);
}

// -------------------------------------------------------------------- regions

std::vector<SignVector> enumerate_regions(const Arrangement& h, const ConstraintSystem& base) {
  if (h.contains_degenerate()) throw DegenerateArrangement();
  std::vector<SignVector> out;
  if (!feasible(base)) return out;
  SignVector current;
  std::function<void(std::size_t, const ConstraintSystem&)> descend =
      [&](std::size_t k, const ConstraintSystem& cell) {
        if (k == h.size()) {
          out.push_back(current);
          return;
        }
        const auto& hp = h[k];
        for (std::int8_t s : {std::int8_t{-1}, std::int8_t{1}}) {
          ConstraintSystem next = cell;
          // s = -1: n.x < o ; s = +1: -n.x < -o
          next.add_strict(hp.normal() * Rational(-s), hp.offset() * Rational(-s));
          if (!feasible(next)) continue;
          current.push_back(s);
          descend(k + 1, next);
          current.pop_back();
        }
      };
  descend(0, base);
  return out;
}

std::vector<SignVector> enumerate_regions(const Arrangement& h, const Polytope* within) {
  if (within) return enumerate_regions(h, within->relative_interior_system());
  return enumerate_regions(h, ConstraintSystem(h.dim()));
}

std::int64_t closure_count(const std::vector<SignVector>& regions, const SignVector& s) {
  std::int64_t n = 0;
  for (const auto& r : regions) {
    bool ok = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != 0 && s[i] != r[i]) {
        ok = false;
        break;
      }
    }
    n += ok;
  }
  return n;
}

std::int64_t multiplicity(const Arrangement& h, const RationalVector& x) {
  if (h.contains_degenerate()) throw DegenerateArrangement();
  return region_count(h.through(x));
}

bool transverse(const Arrangement& h, const Polytope& p) {
  for (const auto& hp : h.hyperplanes()) {
    if (hp.degenerate()) return false;
    const bool inside = std::all_of(p.vertices().begin(), p.vertices().end(),
                                    [&](const RationalVector& v) { return hp.contains(v); });
    if (inside) return false;
  }
  const auto poset = build_intersection_poset(h);
  const ConstraintSystem closed = p.closed_system();
  const ConstraintSystem open = p.relative_interior_system();
  for (std::size_t i = 1; i < poset.size(); ++i) {
    ConstraintSystem meets = closed;
    poset.flat(i).add_to(meets);
    if (!feasible(meets)) continue;
    ConstraintSystem meets_interior = open;
    poset.flat(i).add_to(meets_interior);
    if (!feasible(meets_interior)) return false;
  }
  return true;
}

InducedArrangement induced_arrangement(const Arrangement& h, const Flat& s) {
  const auto param = s.parametrization();
  InducedArrangement out{s, param.base, param.basis, Arrangement(param.basis.cols())};
  for (const auto& hp : h.hyperplanes()) {
    if (hp.as_flat().contains(s)) continue;
    RationalVector normal = param.basis.transpose() * hp.normal();
    const Rational offset = hp.offset() - hp.normal().dot(param.base);
    bool zero = true;
    for (Eigen::Index i = 0; i < normal.size(); ++i) zero = zero && normal(i) == 0;
    if (zero) continue;  // parallel to s and disjoint from it
    out.arrangement.add(Hyperplane(std::move(normal), offset));
  }
  return out;
}

}  // namespace iop
