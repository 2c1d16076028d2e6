#pragma once

// Exact dense linear algebra over any field-like scalar (Rational in practice).
// Everything here is elimination-based; there is no pivoting by magnitude since
// arithmetic is exact.

#include "iop/rational.hpp"

#include <span>
#include <vector>

namespace iop {

template <typename Scalar>
struct RrefResult {
  MatrixX<Scalar> matrix;
  std::vector<Eigen::Index> pivots;  // strictly increasing pivot columns

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Reduced row echelon form. Zero rows are kept (at the bottom) so the shape
/// of the input is preserved.
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> m = input;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pick = row;
    while (pick < m.rows() && m(pick, col) == Scalar(0)) ++pick;
    if (pick == m.rows()) continue;
    if (pick != row) m.row(pick).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == Scalar(0)) continue;
      const Scalar f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// Columns form a basis of {x : M x = 0}.
template <typename Derived>
MatrixX<typename Derived::Scalar> null_space(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto reduced = rref(m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : reduced.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  MatrixX<Scalar> basis(n, n - reduced.rank());
  Eigen::Index k = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis.col(k).setConstant(Scalar(0));
    basis(f, k) = Scalar(1);
    for (std::size_t i = 0; i < reduced.pivots.size(); ++i) {
      basis(reduced.pivots[i], k) = -reduced.matrix(static_cast<Eigen::Index>(i), f);
    }
    ++k;
  }
  return basis;
}

enum class SolutionKind { unique_point, affine_family, infeasible };

template <typename Scalar>
struct AffineSolution {
  SolutionKind kind = SolutionKind::infeasible;
  VectorX<Scalar> base;    // a particular solution (empty when infeasible)
  MatrixX<Scalar> basis;   // columns span the direction space (0 columns when unique)
};

/// Solves A x = b exactly.
template <typename DerivedA, typename DerivedB>
AffineSolution<typename DerivedA::Scalar> solve_affine(const Eigen::MatrixBase<DerivedA>& a,
                                                       const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index n = a.cols();
  MatrixX<Scalar> augmented(a.rows(), n + 1);
  augmented.leftCols(n) = a;
  augmented.col(n) = b;
  const auto reduced = rref(augmented);
  if (!reduced.pivots.empty() && reduced.pivots.back() == n) return {};

  AffineSolution<Scalar> out;
  out.base = VectorX<Scalar>::Constant(n, Scalar(0));
  for (std::size_t i = 0; i < reduced.pivots.size(); ++i) {
    out.base(reduced.pivots[i]) = reduced.matrix(static_cast<Eigen::Index>(i), n);
  }
  out.basis = null_space(a);
  out.kind = out.basis.cols() == 0 ? SolutionKind::unique_point : SolutionKind::affine_family;
  return out;
}

/// Smallest t >= 1 with t*x integral for every listed point.
inline Integer lcm_denominators(std::span<const RationalVector> points) {
  Integer out = 1;
  for (const auto& p : points) {
    for (Eigen::Index i = 0; i < p.size(); ++i) out = lcm(out, denominator_of(p(i)));
  }
  return out;
}

/// Multiplies a rational row by the lcm of its denominators, giving integers
/// with the same sign pattern.
inline std::vector<Integer> clear_denominators(const RationalVector& row) {
  Integer scale = 1;
  for (Eigen::Index i = 0; i < row.size(); ++i) scale = lcm(scale, denominator_of(row(i)));
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(row.size()));
  for (Eigen::Index i = 0; i < row.size(); ++i) {
    out.push_back(numerator_of(row(i) * Rational(scale)));
  }
  return out;
}

}  // namespace iop
