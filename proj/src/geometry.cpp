#include "iop/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace iop {

// ---------------------------------------------------------------- constraints

ConstraintSystem& ConstraintSystem::add(RationalVector normal, Rational offset,
                                        Relation relation) {
  if (normal.size() != dim_) throw DimensionMismatch("constraint dimension mismatch");
  rows_.push_back({std::move(normal), std::move(offset), relation});
  return *this;
}

ConstraintSystem& ConstraintSystem::append(const ConstraintSystem& other) {
  if (other.dim_ != dim_) throw DimensionMismatch("constraint system dimension mismatch");
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
  return *this;
}

bool ConstraintSystem::satisfied_by(const RationalVector& x) const {
  for (const auto& c : rows_) {
    const Rational v = c.normal.dot(x);
    switch (c.relation) {
      case Relation::less_equal:
        if (!(v <= c.offset)) return false;
        break;
      case Relation::less:
        if (!(v < c.offset)) return false;
        break;
      case Relation::equal:
        if (v != c.offset) return false;
        break;
    }
  }
  return true;
}

namespace {

struct Inequality {
  std::vector<Rational> a;
  Rational b;
  bool strict;
};

// Keeps, per normalized direction, only the tightest bound. Returns false as
// soon as a constant constraint is violated.
class InequalityPool {
 public:
  bool insert(std::vector<Rational> a, Rational b, bool strict) {
    std::size_t lead = 0;
    while (lead < a.size() && a[lead] == 0) ++lead;
    if (lead == a.size()) return strict ? (0 < b) : (0 <= b);
    const Rational scale = 1 / abs(a[lead]);
    for (std::size_t j = lead; j < a.size(); ++j) a[j] *= scale;
    b *= scale;
    auto [it, inserted] = bounds_.try_emplace(std::move(a), b, strict);
    if (!inserted) {
      auto& [old_b, old_strict] = it->second;
      if (b < old_b) {
        old_b = b;
        old_strict = strict;
      } else if (b == old_b) {
        old_strict = old_strict || strict;
      }
    }
    return true;
  }

  std::vector<Inequality> take() {
    std::vector<Inequality> out;
    out.reserve(bounds_.size());
    for (auto& [a, bs] : bounds_) out.push_back({a, bs.first, bs.second});
    bounds_.clear();
    return out;
  }

 private:
  std::map<std::vector<Rational>, std::pair<Rational, bool>> bounds_;
};

bool fourier_motzkin(std::vector<Inequality> rows, std::size_t vars) {
  std::vector<bool> alive(vars, true);
  for (;;) {
    // Pick the variable whose elimination creates the fewest new rows.
    std::size_t best = vars;
    long best_cost = 0;
    for (std::size_t j = 0; j < vars; ++j) {
      if (!alive[j]) continue;
      long pos = 0, neg = 0;
      for (const auto& r : rows) {
        if (r.a[j] > 0) ++pos;
        else if (r.a[j] < 0) ++neg;
      }
      if (pos == 0 && neg == 0) {
        alive[j] = false;
        continue;
      }
      const long cost = pos * neg - pos - neg;
      if (best == vars || cost < best_cost) {
        best = j;
        best_cost = cost;
      }
    }
    if (best == vars) return true;  // only constants remained, all satisfied

    const std::size_t j = best;
    alive[j] = false;
    InequalityPool pool;
    std::vector<const Inequality*> pos, neg;
    for (const auto& r : rows) {
      if (r.a[j] > 0) {
        pos.push_back(&r);
      } else if (r.a[j] < 0) {
        neg.push_back(&r);
      } else if (!pool.insert(r.a, r.b, r.strict)) {
        return false;
      }
    }
    for (const auto* p : pos) {
      for (const auto* n : neg) {
        const Rational wp = -n->a[j];
        const Rational wn = p->a[j];
        std::vector<Rational> a(vars);
        for (std::size_t k = 0; k < vars; ++k) a[k] = p->a[k] * wp + n->a[k] * wn;
        a[j] = 0;
        if (!pool.insert(std::move(a), p->b * wp + n->b * wn, p->strict || n->strict)) {
          return false;
        }
      }
    }
    rows = pool.take();
  }
}

}  // namespace

bool feasible(const ConstraintSystem& system) {
  const Eigen::Index d = system.dim();
  std::vector<const LinearConstraint*> equations, inequalities;
  for (const auto& c : system.constraints()) {
    (c.relation == Relation::equal ? equations : inequalities).push_back(&c);
  }

  // Substitute the equations away: pivot variables become affine in the free ones.
  RationalMatrix aug(static_cast<Eigen::Index>(equations.size()), d + 1);
  for (std::size_t i = 0; i < equations.size(); ++i) {
    aug.row(static_cast<Eigen::Index>(i)).head(d) = equations[i]->normal.transpose();
    aug(static_cast<Eigen::Index>(i), d) = equations[i]->offset;
  }
  const auto reduced = rref(aug);
  if (!reduced.pivots.empty() && reduced.pivots.back() == d) return false;

  std::vector<bool> is_pivot(static_cast<std::size_t>(d), false);
  for (auto p : reduced.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free_vars;
  for (Eigen::Index j = 0; j < d; ++j) {
    if (!is_pivot[static_cast<std::size_t>(j)]) free_vars.push_back(j);
  }

  InequalityPool pool;
  for (const auto* c : inequalities) {
    // x_p = rhs_i - sum_f R(i,f) x_f for pivot p of row i
    Rational b = c->offset;
    std::vector<Rational> a(free_vars.size());
    for (std::size_t k = 0; k < free_vars.size(); ++k) a[k] = c->normal(free_vars[k]);
    for (std::size_t i = 0; i < reduced.pivots.size(); ++i) {
      const Rational& ap = c->normal(reduced.pivots[i]);
      if (ap == 0) continue;
      const auto row = static_cast<Eigen::Index>(i);
      b -= ap * reduced.matrix(row, d);
      for (std::size_t k = 0; k < free_vars.size(); ++k) {
        a[k] -= ap * reduced.matrix(row, free_vars[k]);
      }
    }
    if (!pool.insert(std::move(a), std::move(b), c->relation == Relation::less)) return false;
  }
  return fourier_motzkin(pool.take(), free_vars.size());
}

// ---------------------------------------------------------------- hyperplanes

Hyperplane::Hyperplane(RationalVector normal, Rational offset)
    : normal_(std::move(normal)), offset_(std::move(offset)) {
  Eigen::Index lead = 0;
  while (lead < normal_.size() && normal_(lead) == 0) ++lead;
  if (lead == normal_.size()) {
    if (offset_ != 0) throw std::invalid_argument("equation 0 = c with c != 0 defines no hyperplane");
    degenerate_ = true;
    return;
  }
  const Rational scale = 1 / normal_(lead);
  normal_ *= scale;
  offset_ *= scale;
}

Hyperplane Hyperplane::degenerate(Eigen::Index dim) {
  return Hyperplane(RationalVector::Constant(dim, Rational(0)), 0);
}

Rational Hyperplane::evaluate(const RationalVector& x) const { return normal_.dot(x) - offset_; }

Flat Hyperplane::as_flat() const {
  if (degenerate_) return Flat::ambient(dim());
  return *Flat::from_equations(normal_.transpose(), RationalVector::Constant(1, offset_));
}

bool operator==(const Hyperplane& a, const Hyperplane& b) {
  return a.offset_ == b.offset_ && same(a.normal_, b.normal_);
}

bool operator<(const Hyperplane& a, const Hyperplane& b) {
  if (lex_less(a.normal_, b.normal_)) return true;
  if (lex_less(b.normal_, a.normal_)) return false;
  return a.offset_ < b.offset_;
}

// ---------------------------------------------------------------------- flats

Flat Flat::ambient(Eigen::Index dim) { return Flat(dim, RationalMatrix(0, dim), RationalVector(0)); }

Flat Flat::point(const RationalVector& x) {
  return Flat(x.size(), RationalMatrix::Identity(x.size(), x.size()), x);
}

std::optional<Flat> Flat::from_equations(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("equation system shape mismatch");
  const Eigen::Index d = a.cols();
  RationalMatrix aug(a.rows(), d + 1);
  aug.leftCols(d) = a;
  aug.col(d) = b;
  const auto reduced = rref(aug);
  if (!reduced.pivots.empty() && reduced.pivots.back() == d) return std::nullopt;
  const Eigen::Index r = reduced.rank();
  return Flat(d, reduced.matrix.topLeftCorner(r, d), reduced.matrix.col(d).head(r));
}

bool Flat::contains(const RationalVector& x) const {
  if (x.size() != ambient_dim_) throw DimensionMismatch("point dimension mismatch");
  return codim() == 0 || same(RationalVector(equations_ * x), rhs_);
}

bool Flat::contains(const Flat& other) const {
  const auto meet = intersect(other);
  return meet && *meet == other;
}

std::optional<Flat> Flat::intersect(const Flat& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw DimensionMismatch("flat dimension mismatch");
  RationalMatrix a(codim() + other.codim(), ambient_dim_);
  RationalVector b(codim() + other.codim());
  a << equations_, other.equations_;
  b << rhs_, other.rhs_;
  return from_equations(a, b);
}

std::optional<Flat> Flat::intersect(const Hyperplane& h) const {
  if (h.degenerate()) return *this;
  return intersect(h.as_flat());
}

AffineSolution<Rational> Flat::parametrization() const {
  return solve_affine(equations_, rhs_);
}

void Flat::add_to(ConstraintSystem& system) const {
  for (Eigen::Index i = 0; i < codim(); ++i) {
    system.add_equation(equations_.row(i).transpose(), rhs_(i));
  }
}

bool operator<(const Flat& a, const Flat& b) {
  if (a.ambient_dim_ != b.ambient_dim_) return a.ambient_dim_ < b.ambient_dim_;
  if (lex_less(a.equations_, b.equations_)) return true;
  if (lex_less(b.equations_, a.equations_)) return false;
  return lex_less(a.rhs_, b.rhs_);
}

// ------------------------------------------------------------------ polytopes

namespace {

struct VectorLess {
  bool operator()(const RationalVector& a, const RationalVector& b) const { return lex_less(a, b); }
};

bool is_zero(const RationalVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<RationalVector> intersection_points(
    const Flat& fixed, std::span<const Hyperplane> candidates,
    const std::function<bool(const RationalVector&)>& keep) {
  std::set<RationalVector, VectorLess> found;
  std::function<void(std::size_t, const Flat&)> descend = [&](std::size_t start, const Flat& f) {
    if (f.dim() == 0) {
      const RationalVector x = f.parametrization().base;
      if (keep(x)) found.insert(x);
      return;
    }
    // Not enough candidates left to cut down to a point.
    if (candidates.size() - start < static_cast<std::size_t>(f.dim())) return;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      if (candidates[i].degenerate()) continue;
      auto next = f.intersect(candidates[i]);
      if (!next || next->dim() != f.dim() - 1) continue;
      descend(i + 1, *next);
    }
  };
  descend(0, fixed);
  return {found.begin(), found.end()};
}

Flat affine_span(std::span<const RationalVector> points) {
  if (points.empty()) throw std::invalid_argument("affine span of an empty point set");
  const Eigen::Index d = points.front().size();
  RationalMatrix diffs(static_cast<Eigen::Index>(points.size()) - 1, d);
  for (std::size_t i = 1; i < points.size(); ++i) {
    diffs.row(static_cast<Eigen::Index>(i) - 1) = (points[i] - points[0]).transpose();
  }
  const RationalMatrix normals = null_space(diffs);
  const RationalMatrix eq = normals.transpose();
  const RationalVector rhs = eq * points[0];
  return *Flat::from_equations(eq, rhs);
}

Flat affine_span(const Polytope& p) { return p.affine_span(); }

std::vector<RationalVector> polytope_vertices(const Polytope& p) { return p.vertices(); }

Polytope::Polytope(Eigen::Index dim, std::vector<Halfspace> halfspaces,
                   std::vector<Hyperplane> equations)
    : dim_(dim), halfspaces_(std::move(halfspaces)), equations_(std::move(equations)) {
  for (const auto& h : halfspaces_) {
    if (h.normal.size() != dim_) throw DimensionMismatch("halfspace dimension mismatch");
  }
  for (const auto& e : equations_) {
    if (e.dim() != dim_) throw DimensionMismatch("equation dimension mismatch");
  }
  if (!feasible(closed_system())) throw EmptyPolytope();

  // Bounded iff the recession cone is {0}.
  for (Eigen::Index i = 0; i < dim_; ++i) {
    for (int s : {1, -1}) {
      ConstraintSystem cone(dim_);
      for (const auto& h : halfspaces_) cone.add_weak(h.normal, 0);
      for (const auto& e : equations_) cone.add_equation(e.normal(), 0);
      RationalVector dir = RationalVector::Constant(dim_, Rational(0));
      dir(i) = -s;
      cone.add_strict(dir, 0);  // s * y_i > 0
      if (feasible(cone)) throw UnboundedPolytope();
    }
  }

  Flat fixed = Flat::ambient(dim_);
  for (const auto& e : equations_) fixed = *fixed.intersect(e);
  std::vector<Hyperplane> boundaries;
  for (const auto& h : halfspaces_) {
    if (!is_zero(h.normal)) boundaries.emplace_back(h.normal, h.offset);
  }
  vertices_ = intersection_points(fixed, boundaries,
                                  [this](const RationalVector& x) { return contains(x); });
  span_ = iop::affine_span(vertices_);
  implicit_.reserve(halfspaces_.size());
  for (const auto& h : halfspaces_) {
    bool tight = true;
    for (const auto& v : vertices_) {
      if (h.normal.dot(v) != h.offset) {
        tight = false;
        break;
      }
    }
    implicit_.push_back(tight);
  }
}

Polytope Polytope::cube(Eigen::Index dim) {
  return box(RationalVector::Constant(dim, Rational(0)), RationalVector::Constant(dim, Rational(1)));
}

Polytope Polytope::box(const RationalVector& lower, const RationalVector& upper) {
  const Eigen::Index d = lower.size();
  std::vector<Halfspace> hs;
  for (Eigen::Index i = 0; i < d; ++i) {
    RationalVector e = RationalVector::Constant(d, Rational(0));
    e(i) = 1;
    hs.push_back({e, upper(i)});
    hs.push_back({RationalVector(-e), -lower(i)});
  }
  return Polytope(d, std::move(hs));
}

Polytope Polytope::standard_simplex(Eigen::Index n) {
  std::vector<Halfspace> hs;
  for (Eigen::Index i = 0; i < n; ++i) {
    RationalVector e = RationalVector::Constant(n, Rational(0));
    e(i) = -1;
    hs.push_back({e, 0});
  }
  return Polytope(n, std::move(hs), {Hyperplane(RationalVector::Constant(n, Rational(1)), 1)});
}

std::vector<Hyperplane> Polytope::facet_hyperplanes() const {
  std::set<Hyperplane> out;
  for (std::size_t i = 0; i < halfspaces_.size(); ++i) {
    if (implicit_[i] || is_zero(halfspaces_[i].normal)) continue;
    out.emplace(halfspaces_[i].normal, halfspaces_[i].offset);
  }
  return {out.begin(), out.end()};
}

ConstraintSystem Polytope::closed_system() const {
  ConstraintSystem s(dim_);
  for (const auto& h : halfspaces_) s.add_weak(h.normal, h.offset);
  for (const auto& e : equations_) {
    if (!e.degenerate()) s.add_equation(e.normal(), e.offset());
  }
  return s;
}

ConstraintSystem Polytope::relative_interior_system() const {
  ConstraintSystem s(dim_);
  span_.add_to(s);
  for (std::size_t i = 0; i < halfspaces_.size(); ++i) {
    if (!implicit_[i]) s.add_strict(halfspaces_[i].normal, halfspaces_[i].offset);
  }
  return s;
}

bool Polytope::contains(const RationalVector& x) const {
  for (const auto& h : halfspaces_) {
    if (h.normal.dot(x) > h.offset) return false;
  }
  for (const auto& e : equations_) {
    if (!e.contains(x)) return false;
  }
  return true;
}

bool Polytope::relative_interior_contains(const RationalVector& x) const {
  if (!span_.contains(x)) return false;
  for (std::size_t i = 0; i < halfspaces_.size(); ++i) {
    if (!implicit_[i] && !(halfspaces_[i].normal.dot(x) < halfspaces_[i].offset)) return false;
  }
  return true;
}

// ------------------------------------------------------------- lattice frames

namespace {

// g = a*x + b*y, g >= 0
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  x = old_s;
  y = old_t;
}

}  // namespace

LatticeFrame lattice_frame(const Flat& s) {
  const Eigen::Index d = s.ambient_dim();
  const Eigen::Index r = s.codim();
  MatrixX<Integer> a(r, d);
  VectorX<Integer> b(r);
  for (Eigen::Index i = 0; i < r; ++i) {
    RationalVector row(d + 1);
    row.head(d) = s.equations().row(i).transpose();
    row(d) = s.rhs()(i);
    const auto ints = clear_denominators(row);
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = ints[static_cast<std::size_t>(j)];
    b(i) = ints[static_cast<std::size_t>(d)];
  }

  // Unimodular column operations bring A to [L | 0] with L lower triangular.
  MatrixX<Integer> v = MatrixX<Integer>::Identity(d, d);
  for (Eigen::Index i = 0; i < r; ++i) {
    const Eigen::Index col = i;
    for (Eigen::Index j = col + 1; j < d; ++j) {
      if (a(i, j) == 0) continue;
      if (a(i, col) == 0) {
        a.col(col).swap(a.col(j));
        v.col(col).swap(v.col(j));
        continue;
      }
      Integer g, x, y;
      extended_gcd(a(i, col), a(i, j), g, x, y);
      const Integer p = a(i, col) / g, q = a(i, j) / g;
      const VectorX<Integer> ac = a.col(col), aj = a.col(j);
      const VectorX<Integer> vc = v.col(col), vj = v.col(j);
      a.col(col) = ac * x + aj * y;
      a.col(j) = aj * p - ac * q;
      v.col(col) = vc * x + vj * y;
      v.col(j) = vj * p - vc * q;
    }
    if (a(i, col) == 0) throw std::logic_error("flat equations are not independent");
  }

  // Forward substitution L y = b over the rationals.
  std::vector<Rational> y(static_cast<std::size_t>(r));
  Integer period = 1;
  for (Eigen::Index i = 0; i < r; ++i) {
    Rational acc = Rational(b(i));
    for (Eigen::Index j = 0; j < i; ++j) acc -= Rational(a(i, j)) * y[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = acc / Rational(a(i, i));
    period = lcm(period, denominator_of(y[static_cast<std::size_t>(i)]));
  }

  LatticeFrame frame;
  frame.period = period;
  frame.anchor = VectorX<Integer>::Constant(d, Integer(0));
  for (Eigen::Index i = 0; i < r; ++i) {
    const Integer coef = numerator_of(y[static_cast<std::size_t>(i)] * Rational(period));
    frame.anchor += v.col(i) * coef;
  }
  frame.basis = v.rightCols(d - r);
  return frame;
}

Integer lattice_period(const Flat& s) { return lattice_frame(s).period; }

// ----------------------------------------------------------- lattice sections

LatticeSection::LatticeSection(const Polytope& p, const std::optional<Flat>& flat)
    : ambient_dim_(p.ambient_dim()) {
  const std::optional<Flat> span = flat ? p.affine_span().intersect(*flat) : p.affine_span();
  if (!span) return;
  const LatticeFrame frame = lattice_frame(*span);
  period_ = to_int64(frame.period);
  dim_ = frame.basis.cols();
  anchor_.resize(static_cast<std::size_t>(ambient_dim_));
  basis_.assign(static_cast<std::size_t>(ambient_dim_),
                std::vector<std::int64_t>(static_cast<std::size_t>(dim_)));
  for (Eigen::Index i = 0; i < ambient_dim_; ++i) {
    anchor_[static_cast<std::size_t>(i)] = to_int64(frame.anchor(i));
    for (Eigen::Index j = 0; j < dim_; ++j) {
      basis_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = to_int64(frame.basis(i, j));
    }
  }

  const RationalMatrix basis = frame.basis.cast<Rational>();
  const RationalVector anchor = frame.anchor.cast<Rational>();
  const Rational per(frame.period);
  std::vector<Halfspace> unit;
  for (std::size_t h = 0; h < p.halfspaces().size(); ++h) {
    if (p.implicit()[h]) continue;
    const auto& hs = p.halfspaces()[h];
    RationalVector row(dim_ + 1);
    row.head(dim_) = basis.transpose() * hs.normal;
    row(dim_) = per * hs.offset - hs.normal.dot(anchor);
    const auto ints = clear_denominators(row);
    Row r;
    bool constant = true;
    for (Eigen::Index j = 0; j < dim_; ++j) {
      r.coeff.push_back(to_int64(ints[static_cast<std::size_t>(j)]));
      constant = constant && r.coeff.back() == 0;
    }
    r.rhs = to_int64(ints[static_cast<std::size_t>(dim_)]);
    if (constant) {
      if (r.rhs < 0) return;           // section misses P entirely
      if (r.rhs == 0) open_ok_ = false;  // section lies in a facet
      continue;
    }
    unit.push_back({row.head(dim_), row(dim_)});
    rows_.push_back(std::move(r));
  }

  if (dim_ > 0) {
    ConstraintSystem check(dim_);
    for (const auto& u : unit) check.add_weak(u.normal, u.offset);
    if (!feasible(check)) return;
    const Polytope q(dim_, unit);
    lower_.assign(static_cast<std::size_t>(dim_), Rational(0));
    upper_.assign(static_cast<std::size_t>(dim_), Rational(0));
    bool first = true;
    for (const auto& v : q.vertices()) {
      for (Eigen::Index j = 0; j < dim_; ++j) {
        auto& lo = lower_[static_cast<std::size_t>(j)];
        auto& hi = upper_[static_cast<std::size_t>(j)];
        if (first || v(j) < lo) lo = v(j);
        if (first || v(j) > hi) hi = v(j);
      }
      first = false;
    }
  }
  empty_ = false;
}

template <typename Visit>
void LatticeSection::scan(std::int64_t t, bool open, Visit&& visit) const {
  if (empty_ || t % period_ != 0 || (open && !open_ok_)) return;
  const std::int64_t u = t / period_;
  const auto k = static_cast<std::size_t>(dim_);
  std::vector<std::int64_t> lo(k), hi(k), y(k);
  for (std::size_t j = 0; j < k; ++j) {
    lo[j] = to_int64(floor(lower_[j] * Rational(u)));
    hi[j] = to_int64(ceil(upper_[j] * Rational(u)));
    y[j] = lo[j];
  }
  for (;;) {
    bool inside = true;
    for (const auto& r : rows_) {
      std::int64_t v = 0;
      for (std::size_t j = 0; j < k; ++j) v += r.coeff[j] * y[j];
      const std::int64_t bound = u * r.rhs;
      if (open ? v >= bound : v > bound) {
        inside = false;
        break;
      }
    }
    if (inside) visit(std::span<const std::int64_t>(y), u);
    std::size_t j = 0;
    while (j < k && y[j] == hi[j]) {
      y[j] = lo[j];
      ++j;
    }
    if (j == k) break;
    ++y[j];
  }
}

std::int64_t LatticeSection::count(std::int64_t t, bool open) const {
  std::int64_t n = 0;
  scan(t, open, [&n](std::span<const std::int64_t>, std::int64_t) { ++n; });
  return n;
}

void LatticeSection::for_each(std::int64_t t, bool open,
                              const std::function<void(std::span<const std::int64_t>)>& fn) const {
  const auto d = static_cast<std::size_t>(ambient_dim_);
  std::vector<std::int64_t> x(d);
  scan(t, open, [&](std::span<const std::int64_t> y, std::int64_t u) {
    for (std::size_t i = 0; i < d; ++i) {
      std::int64_t v = u * anchor_[i];
      for (std::size_t j = 0; j < y.size(); ++j) v += basis_[i][j] * y[j];
      x[i] = v;
    }
    fn(std::span<const std::int64_t>(x));
  });
}

std::int64_t integer_points(const Polytope& p, bool open, const std::optional<Flat>& flat,
                            std::int64_t t) {
  if (t < 1) throw std::invalid_argument("dilation must be positive");
  return LatticeSection(p, flat).count(t, open);
}

std::vector<std::vector<std::int64_t>> list_integer_points(const Polytope& p, bool open,
                                                           const std::optional<Flat>& flat,
                                                           std::int64_t t) {
  std::vector<std::vector<std::int64_t>> out;
  LatticeSection(p, flat).for_each(t, open, [&out](std::span<const std::int64_t> x) {
    out.emplace_back(x.begin(), x.end());
  });
  return out;
}

}  // namespace iop
