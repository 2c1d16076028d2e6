// iop: command-line front end.
// Exit status: 0 success, 1 usage or other error, 2 unreadable input, 3 a --check failed.

#include "iop/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace iop;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_usage = 1;
constexpr int exit_parse = 2;
constexpr int exit_check = 3;

struct Options {
  std::int64_t max_t = 8;
  std::optional<std::int64_t> period_bound;
  bool check = false;
  bool json = false;
};

class Report {
 public:
  template <typename T>
    requires std::is_arithmetic_v<T>
  void set(const std::string& key, T value) {
    fields_[key] = value;
  }
  void set(const std::string& key, const std::string& v) { fields_[key] = v; }
  void set(const std::string& key, const Rational& v) { fields_[key] = to_string(v); }
  void set(const std::string& key, const Integer& v) { fields_[key] = to_string(v); }
  void set(const std::string& key, const Polynomial& p) { fields_[key] = p.to_string("λ"); }
  void set(const std::string& key, const Quasipolynomial& q) { fields_[key] = q.serialize(); }

  /// Records a check outcome; the first failure message is kept.
  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    fields_["checks"][name] = ok ? "ok" : "FAILED" + (detail.empty() ? "" : " (" + detail + ")");
    if (!ok && failure_.empty()) failure_ = name + (detail.empty() ? "" : ": " + detail);
  }
  const std::string& failure() const { return failure_; }

  void print(std::ostream& out, bool as_json) const {
    if (as_json) {
      out << fields_.dump(2) << '\n';
      return;
    }
    print_text(out, fields_, "");
  }

 private:
  static void print_text(std::ostream& out, const json& j, const std::string& prefix) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        print_text(out, value, prefix + key + ".");
      } else if (value.is_string()) {
        out << prefix << key << ": " << value.get<std::string>() << '\n';
      } else {
        out << prefix << key << ": " << value.dump() << '\n';
      }
    }
  }

  json fields_ = json::object();
  std::string failure_;
};

std::string first_mismatch(std::int64_t t) { return "first disagreement at t = " + std::to_string(t); }

// Compares q against a direct count for t = 1..max_t, never stopping short of the
// (degree + 1) * period points that determine q.
template <typename Count>
void check_reproduces(Report& r, const std::string& name, const Quasipolynomial& q, std::int64_t max_t, Count&& count) {
  max_t = std::max<std::int64_t>(max_t, (q.degree() + 1) * q.period());
  for (std::int64_t t = 1; t <= max_t; ++t) {
    if (q(t) != count(t)) {
      r.check(name, false, first_mismatch(t));
      return;
    }
  }
  r.check(name, true);
}

void run_chromatic(Report& r, const Options& o, const std::string& path) {
  const Graph g = parse_graph(read_file(path));
  const Polynomial chi = chromatic_polynomial(g);
  r.set("nodes", g.order);
  r.set("edges", g.edges.size());
  r.set("chromatic", chi);
  r.set("open_ehrhart", Quasipolynomial::polynomial(chi.shifted(-1)));
  r.set("denominator", 1);
  r.set("acyclic_orientations", g.has_loop() ? 0 : acyclic_orientations(g));
  if (!o.check) return;
  r.check("deletion_contraction", chi == deletion_contraction(g));
  if (!g.has_loop()) {
    r.check("characteristic_polynomial", characteristic_equals_chromatic(g));
    if (g.edges.size() <= 20)
      r.check("acyclic_orientations", acyclic_orientations(g) == acyclic_orientations_brute_force(g));
    r.check("compatible_pairs", compatible_pairs_check(g, 2) && compatible_pairs_check(g, 3));
    const InsideOutPolytope iop(Polytope::cube(g.order), graphic_arrangement(g));
    check_reproduces(r, "direct_counts", Quasipolynomial::polynomial(chi.shifted(-1)), o.max_t,
                     [&](std::int64_t t) { return iop.open_count(t, true); });
  }
}

void run_signed(Report& r, const Options& o, const std::string& path) {
  const SignedGraph s = parse_signed_graph(read_file(path));
  const auto pair = signed_chromatic_pair(s);
  r.set("nodes", s.order);
  r.set("balanced", s.balanced());
  r.set("chromatic", pair.chi);
  r.set("zero_free_chromatic", pair.chi_star);
  if (!s.forces_zero()) {
    const InsideOutPolytope iop(Polytope::cube(s.order), signed_arrangement(s, true));
    const auto q = iop.ehrhart(Enumerator::open_interior, o.period_bound.value_or(2));
    r.set("open_ehrhart", q);
    r.set("denominator", iop.denominator());
    r.set("period", q.minimal_period());
  }
  r.set("acyclic_orientations", region_count(signed_arrangement(s, false)));
  if (!o.check) return;
  bool colorings = true;
  std::string detail;
  for (int c = 0; c <= 4 && colorings; ++c) {
    colorings = pair.chi(Rational(2 * c + 1)) == signed_coloring_oracle(s, c, false) &&
                pair.chi_star(Rational(2 * c)) == signed_coloring_oracle(s, c, true);
    if (!colorings) detail = "first disagreement at c = " + std::to_string(c);
  }
  r.check("coloring_oracle", colorings, detail);
  r.check("compatible_pairs", signed_compatible_check(s, 1) && signed_compatible_check(s, 2));
}

void run_compose(Report& r, const Options& o, const std::string& path) {
  const Graph g = parse_graph(read_file(path));
  if (g.has_loop()) throw Error("compositions need a loopless graph");
  if (g.order < 1) throw Error("compositions need at least one node");
  const std::int64_t bound = lcm_up_to(g.largest_component());
  if (bound > 60) std::cerr << "warning: period bound " << bound << " makes interpolation slow\n";
  const auto c = composition_counter(g);
  const Rational sign = g.order % 2 ? 1 : -1;
  r.set("nodes", g.order);
  r.set("largest_component", g.largest_component());
  r.set("period_bound", c.period_bound);
  r.set("quasipolynomial", c.quasipolynomial);
  r.set("period", c.quasipolynomial.minimal_period());
  r.set("acyclic_orientations", c.quasipolynomial(0) * sign);
  if (!o.check) return;
  check_reproduces(r, "direct_counts", c.quasipolynomial, o.max_t,
                   [&](std::int64_t t) { return composition_count_brute_force(g, t); });
  bool ok = true;
  std::string detail;
  for (std::int64_t t = 0; t <= 6 && ok; ++t) {
    ok = c.quasipolynomial(-t) * sign == composition_reciprocity_oracle(g, t);
    if (!ok) detail = first_mismatch(t);
  }
  r.check("reciprocity_oracle", ok, detail);
}

struct AntimagicArgs {
  std::string file;
  int square = 0;
  bool diagonals = false, wrapped = false, strong = false;
};

void run_antimagic(Report& r, const Options& o, const AntimagicArgs& a) {
  LinearFormSet f;
  if (a.square > 0) {
    f = square_forms(a.square, a.wrapped ? SquareLines::wrapped : a.diagonals ? SquareLines::diagonals : SquareLines::semi);
  } else if (!a.file.empty()) {
    f = parse_forms(read_file(a.file));
  } else {
    throw CLI::ValidationError("antimagic", "give a forms file or --square n");
  }
  const auto e = antimagic_enumerators(f, a.strong);
  r.set("forms", f.count());
  r.set("dim", f.dim());
  r.set("strong", a.strong);
  r.set("hyperplanes", e.hyperplanes);
  r.set("denominator", e.denominator);
  r.set("regions", e.regions);
  r.set("open", e.open);
  r.set("closed", e.closed);
  r.set("period", e.open.minimal_period());
  r.set("reciprocity_ok", reciprocity_holds(e.closed, e.open, static_cast<int>(f.dim())));
  r.set("equal_weight", e.equal_weight);
  r.set("mobius_verified", e.mobius_verified);
  if (!o.check) return;
  check_reproduces(r, "direct_counts", e.open, o.max_t,
                   [&](std::int64_t t) { return antimagic_brute_force(f, t, a.strong); });
}

void run_generic(Report& r, const Options& o, const std::string& first, const std::string& second) {
  auto inst = second.empty() ? parse_instance(read_file(first))
                             : Instance{parse_polytope(read_file(first)), parse_arrangement(read_file(second))};
  if (inst.arrangement.dim() != inst.polytope.ambient_dim())
    throw DimensionMismatch("arrangement and polytope dimensions differ");
  const InsideOutPolytope original(inst.polytope, inst.arrangement);
  const auto renormalized = renormalize(original);
  const InsideOutPolytope& iop = original.polytope().full_dimensional() ? original : renormalized.iop;
  const std::int64_t scale = original.polytope().full_dimensional() ? 1 : renormalized.scale;
  const int d = static_cast<int>(iop.dimension());

  auto closed = iop.ehrhart(Enumerator::closed, o.period_bound);
  auto open = iop.ehrhart(Enumerator::open_interior, o.period_bound);
  const bool reciprocity = reciprocity_holds(closed, open, d);
  if (scale != 1) {
    closed = closed.stretched(scale);
    open = open.stretched(scale);
  }
  r.set("dim", d);
  r.set("hyperplanes", original.arrangement().size());
  if (scale != 1) r.set("lattice_period", scale);
  r.set("denominator", original.denominator());
  r.set("transverse", original.transverse());
  r.set("regions", iop.regions().size());
  r.set("closed", closed);
  r.set("open", open);
  r.set("period", closed.minimal_period());
  r.set("open_period", open.minimal_period());
  r.set("reciprocity_ok", reciprocity);
  if (iop.transverse()) r.set("subleading_ok", iop.subleading_check());
  if (!o.check) return;
  check_reproduces(r, "closed_counts", closed, o.max_t, [&](std::int64_t t) { return original.closed_count(t); });
  check_reproduces(r, "open_counts", open, o.max_t, [&](std::int64_t t) { return original.open_count(t, true); });
  bool ok = true;
  std::string detail;
  for (std::int64_t t = 1; t <= o.max_t && ok; ++t) {
    ok = original.open_count_mobius(t) == original.open_count(t, true);
    if (ok && original.transverse())
      ok = original.closed_count_mobius(t) == original.closed_count(t) &&
           original.closed_count(t, Multiplicity::local) == original.closed_count(t);
    if (!ok) detail = first_mismatch(t);
  }
  r.check("mobius_and_multiplicity", ok, detail);
}

void run_subspace(Report& r, const Options& o, const std::string& polytope, const std::string& subspaces) {
  const SubspaceInsideOut s(parse_polytope(read_file(polytope)), parse_subspaces(read_file(subspaces)));
  const auto closed = s.ehrhart(Enumerator::closed, o.period_bound);
  const auto open = s.ehrhart(Enumerator::open_interior, o.period_bound);
  r.set("dim", s.polytope().dimension());
  r.set("subspaces", s.arrangement().size());
  r.set("flats", s.poset().size());
  r.set("denominator", s.denominator());
  r.set("transverse", s.transverse());
  r.set("closed", closed);
  r.set("open", open);
  r.set("period", closed.minimal_period());
  r.set("open_period", open.minimal_period());
  if (s.transverse()) r.set("reciprocity_ok", reciprocity_holds(closed, open, static_cast<int>(s.polytope().dimension())));
  if (!o.check) return;
  check_reproduces(r, "closed_counts", closed, o.max_t, [&](std::int64_t t) { return s.closed_count(t); });
  check_reproduces(r, "open_counts", open, o.max_t, [&](std::int64_t t) { return s.open_count(t, true); });
  if (!s.transverse()) return;
  bool ok = true;
  std::string detail;
  for (std::int64_t t = 1; t <= o.max_t && ok; ++t) {
    ok = s.closed_count_mobius(t) == s.closed_count(t) && s.open_count_mobius(t) == s.open_count(t);
    if (!ok) detail = first_mismatch(t);
  }
  r.check("mobius", ok, detail);
}

void run_regions(Report& r, const Options& o, const std::string& path) {
  const Arrangement h = parse_arrangement(read_file(path));
  r.set("dim", h.dim());
  r.set("hyperplanes", h.size());
  if (!h.contains_degenerate()) r.set("flats", build_intersection_poset(h).size());
  r.set("characteristic", characteristic_polynomial(h));
  r.set("regions", region_count(h));
  if (!o.check) return;
  r.check("sign_vectors", region_count(h) == static_cast<std::int64_t>(h.contains_degenerate() ? 0 : enumerate_regions(h).size()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice points in polytopes cut by hyperplane and subspace arrangements"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--max-t", o.max_t, "largest dilation used by --check")->check(CLI::PositiveNumber);
  app.add_option("--period-bound", o.period_bound, "override the interpolation period bound")->check(CLI::PositiveNumber);
  app.add_flag("--check", o.check, "cross-check against independent counts");
  app.add_flag("--json", o.json, "print the report as JSON");

  std::string first, second;
  AntimagicArgs anti;
  auto* chromatic = app.add_subcommand("chromatic", "chromatic polynomial of a graph");
  chromatic->add_option("graph", first)->required();
  auto* signed_cmd = app.add_subcommand("signed-chromatic", "both chromatic polynomials of a signed graph");
  signed_cmd->add_option("graph", first)->required();
  auto* compose = app.add_subcommand("compose", "graph-strict compositions");
  compose->add_option("graph", first)->required();
  auto* antimagic = app.add_subcommand("antimagic", "antimagic enumerators of a set of linear forms");
  antimagic->add_option("forms", anti.file);
  antimagic->add_option("--square", anti.square, "n x n square instead of a forms file")->check(CLI::PositiveNumber);
  auto* semi = antimagic->add_flag("--semi", "rows and columns only (default)");
  auto* diag = antimagic->add_flag("--diagonals", anti.diagonals, "add the two diagonals");
  auto* wrap = antimagic->add_flag("--wrapped", anti.wrapped, "add all wrapped diagonals");
  semi->excludes(diag)->excludes(wrap);
  diag->excludes(wrap);
  antimagic->add_flag("--strong", anti.strong, "entries must be distinct as well");
  auto* generic = app.add_subcommand("generic", "a polytope with a hyperplane arrangement");
  generic->add_option("polytope", first, "polytope file, or an instance file on its own")->required();
  generic->add_option("arrangement", second);
  auto* subspace = app.add_subcommand("subspace", "a polytope with a subspace arrangement");
  subspace->add_option("polytope", first)->required();
  subspace->add_option("subspaces", second)->required();
  auto* regions = app.add_subcommand("regions", "characteristic polynomial and regions of an arrangement");
  regions->add_option("arrangement", first)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  Report r;
  r.set("command", app.get_subcommands().front()->get_name());
  try {
    if (chromatic->parsed()) run_chromatic(r, o, first);
    else if (signed_cmd->parsed()) run_signed(r, o, first);
    else if (compose->parsed()) run_compose(r, o, first);
    else if (antimagic->parsed()) run_antimagic(r, o, anti);
    else if (generic->parsed()) run_generic(r, o, first, second);
    else if (subspace->parsed()) run_subspace(r, o, first, second);
    else if (regions->parsed()) run_regions(r, o, first);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const CheckFailed& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return exit_check;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  r.print(std::cout, o.json);
  if (!r.failure().empty()) {
    std::cerr << "check failed: " << r.failure() << '\n';
    return exit_check;
  }
  return 0;
}
