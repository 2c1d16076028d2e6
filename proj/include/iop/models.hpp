#pragma once

// Graphs, signed graphs, compositions and antimagic labellings as
// inside-out polytopes, with independent combinatorial oracles.

#include "iop/insideout.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace iop {

/// Nodes are 0..order-1. Edges form a multiset; a pair (i, i) is a loop.
struct Graph {
  int order = 0;
  std::vector<std::pair<int, int>> edges;

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  bool has_loop() const;
  /// Order of the largest connected component.
  int largest_component() const;
  Graph induced(const std::vector<int>& nodes) const;
};

struct SignedEdge {
  int i, j;
  int sign;  // +1 or -1
};

struct SignedGraph {
  int order = 0;
  std::vector<SignedEdge> edges;
  std::vector<int> halfedges;
  int loose = 0;

  /// Positive loops or loose edges force both chromatic polynomials to zero.
  bool forces_zero() const;
  bool balanced() const;
  /// Negates every edge with exactly one endpoint in `nodes`.
  SignedGraph switched(const std::vector<int>& nodes) const;
  static SignedGraph all_positive(const Graph& g);
};

/// A line set of a covering clutter: points 0..points-1, each line a subset.
struct Clutter {
  int points = 0;
  std::vector<std::vector<int>> lines;
};

/// Forms f_1..f_m as the rows of a matrix acting on R^d.
struct LinearFormSet {
  RationalMatrix forms;
  std::optional<Clutter> clutter;

  Eigen::Index count() const { return forms.rows(); }
  Eigen::Index dim() const { return forms.cols(); }
  bool equal_weight() const;
};

Arrangement graphic_arrangement(const Graph& g);

/// From the interior-open Ehrhart polynomial of the unit cube; zero with a loop.
Polynomial chromatic_polynomial(const Graph& g);
Polynomial deletion_contraction(const Graph& g);
bool characteristic_equals_chromatic(const Graph& g);
/// (-1)^n chi(-1).
std::int64_t acyclic_orientations(const Graph& g);
std::int64_t acyclic_orientations_brute_force(const Graph& g);
/// (-1)^n chi(-c) equals the closed count of the unit cube dilated by c - 1 (c >= 2).
bool compatible_pairs_check(const Graph& g, int c);

/// H[S] (x_j = e x_i per edge, x_i = 0 per halfedge) or its translate by (1/2, ..., 1/2).
Arrangement signed_arrangement(const SignedGraph& s, bool shifted);

struct SignedChromatic {
  Polynomial chi;       // colors -c..c counted by chi(2c + 1)
  Polynomial chi_star;  // zero-free colors counted by chi_star(2c)
};

/// Read off the period-2 interior-open quasipolynomial of ([0,1]^n, H''[S]).
/// Throws CheckFailed when a structural identity fails.
SignedChromatic signed_chromatic_pair(const SignedGraph& s);
/// sum of mu(0, u) lambda^dim u over flats u of H[S] whose edge set is balanced.
Polynomial balanced_flat_sum(const SignedGraph& s);
std::int64_t signed_coloring_oracle(const SignedGraph& s, int c, bool zero_free);
bool signed_compatible_check(const SignedGraph& s, int c);

/// lcm(1, ..., k)
std::int64_t lcm_up_to(int k);

struct CompositionCount {
  Quasipolynomial quasipolynomial;
  std::int64_t period_bound;
};

/// Compositions of t into order-many positive parts with x_i != x_j on edges.
std::int64_t composition_count(const Graph& g, std::int64_t t);
std::int64_t composition_count_brute_force(const Graph& g, std::int64_t t);
CompositionCount composition_counter(const Graph& g);
/// Weak compositions of t, each weighted by the product of acyclic orientation
/// counts of the subgraphs induced on its level sets.
std::int64_t composition_reciprocity_oracle(const Graph& g, std::int64_t t);

struct Pullback {
  Arrangement arrangement;
  std::vector<std::pair<int, int>> degenerate_pairs;
};

/// f_j(x) = f_k(x) for each edge jk of `pattern` (default: all pairs).
Pullback pullback_arrangement(const LinearFormSet& f, const std::optional<Graph>& pattern = {});

struct AntimagicEnumerators {
  Quasipolynomial open;    // interior points of [0, t]^d
  Quasipolynomial closed;  // multiplicity-weighted points of [0, t]^d
  std::size_t hyperplanes = 0;
  std::int64_t regions = 0;
  Integer denominator;
  bool equal_weight = false;
  bool mobius_verified = false;
};

/// Throws EqualForms when two forms coincide. With `strong` the coordinates
/// must also differ (pairs of `distinct_pattern` when given, else all pairs).
AntimagicEnumerators antimagic_enumerators(const LinearFormSet& f, bool strong,
                                           const std::optional<Graph>& distinct_pattern = {},
                                           const std::optional<Graph>& form_pattern = {});

/// Points of (0, t)^d with pairwise distinct form values (and coordinates, if strong).
std::int64_t antimagic_brute_force(const LinearFormSet& f, std::int64_t t, bool strong);

/// Throws ClutterViolation.
LinearFormSet clutter_forms(int points, const std::vector<std::vector<int>>& lines);
/// Variables are edges; one form per node summing its incident edges.
LinearFormSet node_sums(const Graph& g);
/// Variables are nodes; one form per edge summing its endpoints.
LinearFormSet edge_sums(const Graph& g);
/// Variables are nodes then edges; each weight is an element's own label plus
/// the labels of the elements incident with it.
LinearFormSet total_sums(const Graph& g);

enum class SquareLines { semi, diagonals, wrapped };
/// n x n square, variables row-major; rows and columns plus the chosen diagonals.
LinearFormSet square_forms(int n, SquareLines lines);

}  // namespace iop
