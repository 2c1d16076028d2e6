#include "iop/models.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace iop {

namespace {

RationalVector unit(Eigen::Index d, Eigen::Index i, int s = 1) {
  RationalVector v = RationalVector::Constant(d, Rational(0));
  v(i) = s;
  return v;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)), parity(static_cast<std::size_t>(n), 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::pair<int, int> find(int x) {
    int p = 0;
    while (parent[static_cast<std::size_t>(x)] != x) {
      p ^= parity[static_cast<std::size_t>(x)];
      x = parent[static_cast<std::size_t>(x)];
    }
    return {x, p};
  }
  // Joins with x_j = (-1)^odd x_i; returns false on a contradictory cycle.
  bool unite(int i, int j, int odd) {
    auto [ri, pi] = find(i);
    auto [rj, pj] = find(j);
    if (ri == rj) return (pi ^ pj) == odd;
    parent[static_cast<std::size_t>(rj)] = ri;
    parity[static_cast<std::size_t>(rj)] = pi ^ pj ^ odd;
    return true;
  }
  std::vector<int> parent, parity;
};

std::int64_t sign_power(int n) { return n % 2 ? -1 : 1; }

Quasipolynomial cube_open_quasipolynomial(int n, const Arrangement& h, std::int64_t period) {
  return InsideOutPolytope(Polytope::cube(n), h).ehrhart(Enumerator::open_interior, period);
}

}  // namespace

Graph Graph::complete(int n) {
  Graph g{n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  return g;
}

Graph Graph::path(int n) {
  Graph g{n, {}};
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n > 2) g.edges.emplace_back(n - 1, 0);
  return g;
}

bool Graph::has_loop() const {
  return std::any_of(edges.begin(), edges.end(), [](const auto& e) { return e.first == e.second; });
}

int Graph::largest_component() const {
  UnionFind uf(order);
  for (const auto& [i, j] : edges) uf.unite(i, j, 0);
  std::vector<int> size(static_cast<std::size_t>(order), 0);
  int best = 0;
  for (int v = 0; v < order; ++v) best = std::max(best, ++size[static_cast<std::size_t>(uf.find(v).first)]);
  return best;
}

Graph Graph::induced(const std::vector<int>& nodes) const {
  std::vector<int> index(static_cast<std::size_t>(order), -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) index[static_cast<std::size_t>(nodes[k])] = static_cast<int>(k);
  Graph g{static_cast<int>(nodes.size()), {}};
  for (const auto& [i, j] : edges) {
    const int a = index[static_cast<std::size_t>(i)], b = index[static_cast<std::size_t>(j)];
    if (a >= 0 && b >= 0) g.edges.emplace_back(a, b);
  }
  return g;
}

bool SignedGraph::forces_zero() const {
  return loose > 0 || std::any_of(edges.begin(), edges.end(), [](const SignedEdge& e) { return e.i == e.j && e.sign > 0; });
}

bool SignedGraph::balanced() const {
  if (!halfedges.empty()) return false;
  UnionFind uf(order);
  for (const auto& e : edges)
    if (!uf.unite(e.i, e.j, e.sign < 0)) return false;
  return true;
}

SignedGraph SignedGraph::switched(const std::vector<int>& nodes) const {
  std::vector<bool> in(static_cast<std::size_t>(order), false);
  for (int v : nodes) in[static_cast<std::size_t>(v)] = true;
  SignedGraph out = *this;
  for (auto& e : out.edges)
    if (in[static_cast<std::size_t>(e.i)] != in[static_cast<std::size_t>(e.j)]) e.sign = -e.sign;
  return out;
}

SignedGraph SignedGraph::all_positive(const Graph& g) {
  SignedGraph s{g.order, {}, {}, 0};
  for (const auto& [i, j] : g.edges) s.edges.push_back({i, j, 1});
  return s;
}

bool LinearFormSet::equal_weight() const {
  if (forms.rows() == 0) return true;
  const Rational w = forms.row(0).sum();
  for (Eigen::Index r = 1; r < forms.rows(); ++r)
    if (forms.row(r).sum() != w) return false;
  return true;
}

Arrangement graphic_arrangement(const Graph& g) {
  Arrangement h(g.order);
  for (const auto& [i, j] : g.edges) {
    if (i == j) {
      h.add(Hyperplane::degenerate(g.order));
      continue;
    }
    h.add(Hyperplane(unit(g.order, i) - unit(g.order, j), 0));
  }
  return h;
}

Polynomial chromatic_polynomial(const Graph& g) {
  if (g.has_loop()) return {};
  if (g.order == 0) return Polynomial::constant(1);
  const auto q = cube_open_quasipolynomial(g.order, graphic_arrangement(g), 1);
  Polynomial chi = q.constituent(0).shifted(1);
  if (chi.degree() != g.order || chi.leading_coefficient() != 1)
    throw CheckFailed("chromatic polynomial is not monic of degree n");
  return chi;
}

Polynomial deletion_contraction(const Graph& g) {
  if (g.has_loop()) return {};
  if (g.edges.empty()) return Polynomial::monomial(g.order);
  const auto [a, b] = g.edges.back();
  Graph deleted = g;
  deleted.edges.pop_back();
  // Contract b into a, then drop b by renumbering the last node into its slot.
  Graph contracted{g.order - 1, {}};
  auto relabel = [&](int v) {
    if (v == b) v = a;
    return v == g.order - 1 ? b : v;
  };
  for (const auto& [i, j] : deleted.edges) contracted.edges.emplace_back(relabel(i), relabel(j));
  return deletion_contraction(deleted) - deletion_contraction(contracted);
}

bool characteristic_equals_chromatic(const Graph& g) {
  return chromatic_polynomial(g) == characteristic_polynomial(graphic_arrangement(g));
}

std::int64_t acyclic_orientations(const Graph& g) {
  const Rational v = chromatic_polynomial(g)(Rational(-1)) * Rational(sign_power(g.order));
  return to_int64(numerator_of(v));
}

std::int64_t acyclic_orientations_brute_force(const Graph& g) {
  const std::size_t m = g.edges.size();
  if (m >= 63) throw std::invalid_argument("too many edges to enumerate orientations");
  std::int64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(g.order));
    std::vector<int> indeg(static_cast<std::size_t>(g.order), 0);
    for (std::size_t k = 0; k < m; ++k) {
      auto [i, j] = g.edges[k];
      if (mask >> k & 1) std::swap(i, j);
      out[static_cast<std::size_t>(i)].push_back(j);
      ++indeg[static_cast<std::size_t>(j)];
    }
    std::vector<int> ready;
    for (int v = 0; v < g.order; ++v)
      if (!indeg[static_cast<std::size_t>(v)]) ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
      const int v = ready.back();
      ready.pop_back();
      ++seen;
      for (int w : out[static_cast<std::size_t>(v)])
        if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    }
    count += seen == g.order;
  }
  return count;
}

bool compatible_pairs_check(const Graph& g, int c) {
  if (c < 2) throw std::invalid_argument("compatible pair check needs c >= 2");
  const Rational lhs = chromatic_polynomial(g)(Rational(-c)) * Rational(sign_power(g.order));
  if (g.has_loop()) return lhs == 0;
  const InsideOutPolytope iop(Polytope::cube(g.order), graphic_arrangement(g));
  return lhs == iop.closed_count(c - 1);
}

Arrangement signed_arrangement(const SignedGraph& s, bool shifted) {
  const Eigen::Index n = s.order;
  const Rational half(1, 2);
  Arrangement h(n);
  for (const auto& e : s.edges) {
    if (e.i == e.j && e.sign > 0) {
      h.add(Hyperplane::degenerate(n));
      continue;
    }
    if (e.i == e.j) {
      h.add(Hyperplane(unit(n, e.i), shifted ? half : Rational(0)));
      continue;
    }
    // x_j - e x_i = (1 - e)/2 after the shift.
    const RationalVector normal = unit(n, e.j) - unit(n, e.i, e.sign);
    h.add(Hyperplane(normal, shifted ? Rational(1 - e.sign, 2) : Rational(0)));
  }
  for (int i : s.halfedges) h.add(Hyperplane(unit(n, i), shifted ? half : Rational(0)));
  for (int k = 0; k < s.loose; ++k) h.add(Hyperplane::degenerate(n));
  return h;
}

Polynomial balanced_flat_sum(const SignedGraph& s) {
  if (s.forces_zero()) return {};
  const Arrangement h = signed_arrangement(s, false);
  const auto poset = build_intersection_poset(h);
  std::vector<Hyperplane> edge_planes;
  for (const auto& e : s.edges) {
    const RationalVector normal = e.i == e.j ? unit(s.order, e.i) : RationalVector(unit(s.order, e.j) - unit(s.order, e.i, e.sign));
    edge_planes.emplace_back(normal, 0);
  }
  Polynomial sum;
  for (std::size_t k = 0; k < poset.size(); ++k) {
    const Flat& u = poset.flat(k);
    SignedGraph sub{s.order, {}, {}, 0};
    for (std::size_t e = 0; e < s.edges.size(); ++e)
      if (edge_planes[e].as_flat().contains(u)) sub.edges.push_back(s.edges[e]);
    for (int i : s.halfedges)
      if (Hyperplane(unit(s.order, i), 0).as_flat().contains(u)) sub.halfedges.push_back(i);
    if (sub.balanced()) sum += Polynomial::monomial(static_cast<int>(u.dim()), poset.mobius_from_bottom(k));
  }
  return sum;
}

SignedChromatic signed_chromatic_pair(const SignedGraph& s) {
  if (s.forces_zero()) return {};
  if (s.order == 0) return {Polynomial::constant(1), Polynomial::constant(1)};
  const auto q = cube_open_quasipolynomial(s.order, signed_arrangement(s, true), 2);
  SignedChromatic out{q.constituent(0).shifted(1), q.constituent(1).shifted(1)};
  for (const auto* p : {&out.chi, &out.chi_star}) {
    if (p->degree() != s.order || p->leading_coefficient() != 1)
      throw CheckFailed("signed chromatic polynomial is not monic of degree n");
  }
  if (s.balanced() && !(out.chi == out.chi_star)) throw CheckFailed("balanced signed graph with chi != chi*");
  if (!(out.chi == characteristic_polynomial(signed_arrangement(s, false))))
    throw CheckFailed("chi differs from the characteristic polynomial of H[S]");
  if (!(out.chi_star == balanced_flat_sum(s))) throw CheckFailed("chi* differs from the balanced flat sum");
  return out;
}

std::int64_t signed_coloring_oracle(const SignedGraph& s, int c, bool zero_free) {
  if (c < 0) throw std::invalid_argument("c must be nonnegative");
  if (s.forces_zero()) return 0;
  std::vector<int> colors;
  for (int v = -c; v <= c; ++v)
    if (!(zero_free && v == 0)) colors.push_back(v);
  if (colors.empty()) return s.order == 0 ? 1 : 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(s.order), 0);
  std::int64_t count = 0;
  while (true) {
    auto x = [&](int v) { return colors[idx[static_cast<std::size_t>(v)]]; };
    bool proper = true;
    for (const auto& e : s.edges) proper = proper && x(e.j) != e.sign * x(e.i);
    for (int i : s.halfedges) proper = proper && x(i) != 0;
    count += proper;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == colors.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return count;
}

bool signed_compatible_check(const SignedGraph& s, int c) {
  if (c < 1) throw std::invalid_argument("compatible pair check needs c >= 1");
  const auto pair = signed_chromatic_pair(s);
  const Rational sign(sign_power(s.order));
  const Arrangement h = signed_arrangement(s, false);
  if (pair.chi(Rational(-1)) * sign != region_count(h)) return false;
  if (s.forces_zero()) return pair.chi.is_zero() && pair.chi_star.is_zero();
  const RationalVector ones = RationalVector::Constant(s.order, Rational(1));
  const InsideOutPolytope box(Polytope::box(-ones, ones), h);
  if (pair.chi(Rational(-(2 * c + 1))) * sign != box.closed_count(c)) return false;
  const InsideOutPolytope cube(Polytope::cube(s.order), signed_arrangement(s, true));
  return pair.chi_star(Rational(-2 * c)) * sign == cube.closed_count(2 * c - 1);
}

std::int64_t lcm_up_to(int k) {
  std::int64_t l = 1;
  for (int i = 2; i <= k; ++i) l = std::lcm(l, static_cast<std::int64_t>(i));
  return l;
}

std::int64_t composition_count(const Graph& g, std::int64_t t) {
  if (g.order == 1) return t >= 1 ? 1 : 0;
  return InsideOutPolytope(Polytope::standard_simplex(g.order), graphic_arrangement(g)).open_count(t, true);
}

std::int64_t composition_count_brute_force(const Graph& g, std::int64_t t) {
  std::vector<std::int64_t> x(static_cast<std::size_t>(g.order));
  std::int64_t count = 0;
  std::function<void(int, std::int64_t)> place = [&](int k, std::int64_t left) {
    if (k == g.order - 1) {
      if (left < 1) return;
      x[static_cast<std::size_t>(k)] = left;
      bool ok = true;
      for (const auto& [i, j] : g.edges) ok = ok && x[static_cast<std::size_t>(i)] != x[static_cast<std::size_t>(j)];
      count += ok;
      return;
    }
    for (std::int64_t v = 1; v < left; ++v) {
      x[static_cast<std::size_t>(k)] = v;
      place(k + 1, left - v);
    }
  };
  if (g.order > 0) place(0, t);
  return count;
}

CompositionCount composition_counter(const Graph& g) {
  if (g.has_loop()) return {Quasipolynomial(), 1};
  if (g.order == 1) return {Quasipolynomial::polynomial(Polynomial::constant(1)), 1};
  const std::int64_t period = lcm_up_to(g.largest_component());
  const auto r = renormalize(InsideOutPolytope(Polytope::standard_simplex(g.order), graphic_arrangement(g)));
  auto q = r.iop.ehrhart(Enumerator::open_interior, period);
  if (r.scale != 1) q = q.stretched(r.scale);
  return {std::move(q), period};
}

std::int64_t composition_reciprocity_oracle(const Graph& g, std::int64_t t) {
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  std::vector<std::int64_t> x(static_cast<std::size_t>(g.order));
  std::int64_t total = 0;
  std::function<void(int, std::int64_t)> place = [&](int k, std::int64_t left) {
    if (k == g.order - 1) {
      x[static_cast<std::size_t>(k)] = left;
      std::int64_t product = 1;
      std::set<std::int64_t> levels(x.begin(), x.end());
      for (std::int64_t level : levels) {
        std::vector<int> nodes;
        for (int v = 0; v < g.order; ++v)
          if (x[static_cast<std::size_t>(v)] == level) nodes.push_back(v);
        product *= acyclic_orientations_brute_force(g.induced(nodes));
      }
      total += product;
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      x[static_cast<std::size_t>(k)] = v;
      place(k + 1, left - v);
    }
  };
  if (g.order > 0) place(0, t);
  return total;
}

Pullback pullback_arrangement(const LinearFormSet& f, const std::optional<Graph>& pattern) {
  const Graph p = pattern ? *pattern : Graph::complete(static_cast<int>(f.count()));
  if (p.order != f.count()) throw DimensionMismatch("pattern order differs from the number of forms");
  Pullback out{Arrangement(f.dim()), {}};
  for (const auto& [j, k] : p.edges) {
    const RationalVector diff = (f.forms.row(j) - f.forms.row(k)).transpose();
    if (diff.isZero()) {
      out.degenerate_pairs.emplace_back(j, k);
      out.arrangement.add(Hyperplane::degenerate(f.dim()));
      continue;
    }
    out.arrangement.add(Hyperplane(diff, 0));
  }
  return out;
}

AntimagicEnumerators antimagic_enumerators(const LinearFormSet& f, bool strong,
                                           const std::optional<Graph>& distinct_pattern,
                                           const std::optional<Graph>& form_pattern) {
  for (Eigen::Index j = 0; j < f.count(); ++j)
    for (Eigen::Index k = j + 1; k < f.count(); ++k)
      if (f.forms.row(j) == f.forms.row(k))
        throw EqualForms("forms " + std::to_string(j + 1) + " and " + std::to_string(k + 1) + " are equal");
  const int d = static_cast<int>(f.dim());
  Arrangement h = pullback_arrangement(f, form_pattern).arrangement;
  if (strong || distinct_pattern) {
    const Graph g = distinct_pattern ? *distinct_pattern : Graph::complete(d);
    if (g.order != d) throw DimensionMismatch("distinctness pattern order differs from the dimension");
    h = h.merged(graphic_arrangement(g));
  }
  const InsideOutPolytope iop(Polytope::cube(d), h);
  AntimagicEnumerators out;
  out.hyperplanes = h.size();
  out.denominator = iop.denominator();
  out.regions = static_cast<std::int64_t>(iop.regions().size());
  out.open = iop.ehrhart(Enumerator::open_interior);
  out.closed = iop.ehrhart(Enumerator::closed);
  if (!reciprocity_holds(out.closed, out.open, d)) throw CheckFailed("antimagic reciprocity failed");
  out.equal_weight = f.equal_weight();
  if (out.equal_weight) {
    if (!iop.transverse()) throw CheckFailed("equal-weight forms gave a non-transverse arrangement");
    const std::int64_t horizon = std::max<std::int64_t>(4, 2 * out.open.period());
    for (std::int64_t t = 1; t <= horizon; ++t) {
      if (iop.open_count_mobius(t) != out.open(t) || iop.closed_count_mobius(t) != out.closed(t))
        throw CheckFailed("Mobius evaluation disagrees with direct counting at t = " + std::to_string(t));
    }
    out.mobius_verified = true;
  }
  return out;
}

std::int64_t antimagic_brute_force(const LinearFormSet& f, std::int64_t t, bool strong) {
  const auto d = static_cast<std::size_t>(f.dim());
  if (t < 2) return 0;
  std::vector<std::int64_t> x(d, 1);
  std::vector<Rational> values(static_cast<std::size_t>(f.count()));
  std::int64_t count = 0;
  while (true) {
    for (Eigen::Index r = 0; r < f.count(); ++r) {
      Rational v = 0;
      for (std::size_t i = 0; i < d; ++i) v += f.forms(r, static_cast<Eigen::Index>(i)) * x[i];
      values[static_cast<std::size_t>(r)] = v;
    }
    std::vector<Rational> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    bool ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (ok && strong) {
      std::vector<std::int64_t> xs = x;
      std::sort(xs.begin(), xs.end());
      ok = std::adjacent_find(xs.begin(), xs.end()) == xs.end();
    }
    count += ok;
    std::size_t k = 0;
    while (k < d && ++x[k] == t) x[k++] = 1;
    if (k == d) break;
  }
  return count;
}

LinearFormSet clutter_forms(int points, const std::vector<std::vector<int>>& lines) {
  if (points < 1 || lines.empty()) throw ClutterViolation("a covering clutter needs points and lines");
  std::vector<std::set<int>> sets;
  std::vector<bool> covered(static_cast<std::size_t>(points), false);
  for (const auto& line : lines) {
    if (line.empty()) throw ClutterViolation("empty line");
    std::set<int> s;
    for (int x : line) {
      if (x < 0 || x >= points) throw ClutterViolation("line point out of range");
      s.insert(x);
      covered[static_cast<std::size_t>(x)] = true;
    }
    sets.push_back(std::move(s));
  }
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = 0; b < sets.size(); ++b)
      if (a != b && std::includes(sets[b].begin(), sets[b].end(), sets[a].begin(), sets[a].end()))
        throw ClutterViolation("line " + std::to_string(a + 1) + " lies in line " + std::to_string(b + 1));
  if (std::find(covered.begin(), covered.end(), false) != covered.end())
    throw ClutterViolation("lines do not cover every point");
  LinearFormSet out{RationalMatrix::Zero(static_cast<Eigen::Index>(lines.size()), points), Clutter{points, lines}};
  for (std::size_t r = 0; r < sets.size(); ++r)
    for (int x : sets[r]) out.forms(static_cast<Eigen::Index>(r), x) = 1;
  return out;
}

LinearFormSet node_sums(const Graph& g) {
  LinearFormSet out{RationalMatrix::Zero(g.order, static_cast<Eigen::Index>(g.edges.size())), {}};
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    out.forms(g.edges[e].first, static_cast<Eigen::Index>(e)) += 1;
    if (g.edges[e].second != g.edges[e].first) out.forms(g.edges[e].second, static_cast<Eigen::Index>(e)) += 1;
  }
  return out;
}

LinearFormSet edge_sums(const Graph& g) {
  LinearFormSet out{RationalMatrix::Zero(static_cast<Eigen::Index>(g.edges.size()), g.order), {}};
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    out.forms(static_cast<Eigen::Index>(e), g.edges[e].first) += 1;
    out.forms(static_cast<Eigen::Index>(e), g.edges[e].second) += 1;
  }
  return out;
}

LinearFormSet total_sums(const Graph& g) {
  const Eigen::Index n = g.order, m = static_cast<Eigen::Index>(g.edges.size());
  LinearFormSet out{RationalMatrix::Zero(n + m, n + m), {}};
  for (Eigen::Index v = 0; v < n; ++v) out.forms(v, v) = 1;
  for (Eigen::Index e = 0; e < m; ++e) {
    const auto [i, j] = g.edges[static_cast<std::size_t>(e)];
    out.forms(n + e, n + e) = 1;
    out.forms(n + e, i) += 1;
    out.forms(n + e, j) += 1;
    out.forms(i, n + e) += 1;
    if (j != i) out.forms(j, n + e) += 1;
  }
  return out;
}

LinearFormSet square_forms(int n, SquareLines kind) {
  std::vector<std::vector<int>> lines;
  auto cell = [n](int r, int c) { return r * n + c; };
  for (int r = 0; r < n; ++r) {
    lines.emplace_back();
    for (int c = 0; c < n; ++c) lines.back().push_back(cell(r, c));
  }
  for (int c = 0; c < n; ++c) {
    lines.emplace_back();
    for (int r = 0; r < n; ++r) lines.back().push_back(cell(r, c));
  }
  const int shifts = kind == SquareLines::wrapped ? n : (kind == SquareLines::diagonals ? 1 : 0);
  for (int k = 0; k < shifts; ++k) {
    std::vector<int> down, up;
    for (int r = 0; r < n; ++r) {
      down.push_back(cell(r, (r + k) % n));
      up.push_back(cell(r, ((n - 1 - r - k) % n + n) % n));
    }
    lines.push_back(down);
    lines.push_back(up);
  }
  // Wrapped diagonals of small squares can repeat a line as a set.
  std::vector<std::vector<int>> unique;
  std::set<std::set<int>> seen;
  for (const auto& line : lines)
    if (seen.insert(std::set<int>(line.begin(), line.end())).second) unique.push_back(line);
  return clutter_forms(n * n, unique);
}

}  // namespace iop
