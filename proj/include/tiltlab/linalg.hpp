#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tiltlab/errors.hpp"
#include "tiltlab/rational.hpp"

// Exact dense linear algebra over a field scalar (used with Rat throughout
// the engine). Pivoting is deterministic: columns are scanned left to right
// and the pivot is the lowest-index unused row with a nonzero entry, so
// kernel/cokernel bases are reproducible bit for bit.

namespace tiltlab {

template <typename Scalar>
struct Echelon {
  MatrixX<Scalar> rref;          // reduced row echelon form
  std::vector<Eigen::Index> pivot_cols;  // one per pivot row, ascending
};

template <typename Scalar>
Echelon<Scalar> reduced_row_echelon(MatrixX<Scalar> a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (a(i, c) != 0) { p = i; break; }
    }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    a.row(r) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      a.row(i) -= a(i, c) * a.row(r);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivot_cols)};
}

template <typename Scalar>
Eigen::Index rank(const MatrixX<Scalar>& a) {
  return static_cast<Eigen::Index>(reduced_row_echelon(a).pivot_cols.size());
}

// Columns form a basis of ker(a); one basis vector per free column, in
// ascending free-column order.
template <typename Scalar>
MatrixX<Scalar> kernel_basis(const MatrixX<Scalar>& a) {
  const auto ech = reduced_row_echelon(a);
  const Eigen::Index cols = a.cols();
  const Eigen::Index nullity = cols - static_cast<Eigen::Index>(ech.pivot_cols.size());
  MatrixX<Scalar> k = MatrixX<Scalar>::Zero(cols, nullity);
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (Eigen::Index c : ech.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  Eigen::Index out = 0;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    k(f, out) = Scalar(1);
    for (size_t r = 0; r < ech.pivot_cols.size(); ++r) {
      k(ech.pivot_cols[r], out) = -ech.rref(static_cast<Eigen::Index>(r), f);
    }
    ++out;
  }
  return k;
}

// Quotient map onto coker(a) = k^rows / im(a): a full-row-rank matrix q with
// q * a = 0 and rows(q) = rows(a) - rank(a). Computed as a basis of the left
// null space, stacked as rows.
template <typename Scalar>
MatrixX<Scalar> cokernel_projection(const MatrixX<Scalar>& a) {
  MatrixX<Scalar> at = a.transpose();
  return kernel_basis<Scalar>(at).transpose();
}

// Any solution of a*x = b (free variables set to zero), or nullopt when the
// system is inconsistent.
template <typename Scalar>
std::optional<VectorX<Scalar>> solve(const MatrixX<Scalar>& a,
                                     const VectorX<Scalar>& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("solve: incompatible shapes");
  MatrixX<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto ech = reduced_row_echelon(aug);
  VectorX<Scalar> x = VectorX<Scalar>::Zero(a.cols());
  for (size_t r = 0; r < ech.pivot_cols.size(); ++r) {
    const Eigen::Index c = ech.pivot_cols[r];
    if (c == a.cols()) return std::nullopt;  // pivot in the rhs column
    x(c) = ech.rref(static_cast<Eigen::Index>(r), a.cols());
  }
  return x;
}

// Coordinates of each column of `targets` in the column space of `basis`;
// throws EngineBug if some target is not in the span (callers use this only
// where membership is guaranteed).
template <typename Scalar>
MatrixX<Scalar> coordinates_in_basis(const MatrixX<Scalar>& basis,
                                     const MatrixX<Scalar>& targets) {
  MatrixX<Scalar> coords(basis.cols(), targets.cols());
  for (Eigen::Index j = 0; j < targets.cols(); ++j) {
    auto x = solve<Scalar>(basis, targets.col(j));
    if (!x) throw EngineBug("coordinates_in_basis: target outside span");
    coords.col(j) = *x;
  }
  return coords;
}

}  // namespace tiltlab
