#pragma once

// Exact elimination over a field (Rational or GaussianRational).

#include <vector>

#include "beauville/error.hpp"
#include "beauville/exact/matrix.hpp"

namespace beauville {

/// Reduced row echelon form in place; returns pivot columns.
template <class S>
std::vector<Eigen::Index> rref(DenseMat<S>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const S inv = m(row, col).inverse();
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const S factor = m(r, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(r, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class S>
Eigen::Index rank(DenseMat<S> m) {
  return static_cast<Eigen::Index>(rref(m).size());
}

/// Basis of the kernel, one column per free variable.
template <class S>
DenseMat<S> kernel(DenseMat<S> m) {
  const auto pivots = rref(m);
  std::vector<Eigen::Index> free;
  std::size_t pi = 0;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    if (pi < pivots.size() && pivots[pi] == c) {
      ++pi;
    } else {
      free.push_back(c);
    }
  }
  DenseMat<S> out = DenseMat<S>::Constant(m.cols(), static_cast<Eigen::Index>(free.size()), S(0));
  for (std::size_t k = 0; k < free.size(); ++k) {
    out(free[k], static_cast<Eigen::Index>(k)) = S(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      out(pivots[r], static_cast<Eigen::Index>(k)) = -m(static_cast<Eigen::Index>(r), free[k]);
    }
  }
  return out;
}

/// Solves m x = rhs; throws InvalidArgument when inconsistent or not unique.
template <class S>
Vec<S> solve_unique(const DenseMat<S>& m, const Vec<S>& rhs) {
  if (m.rows() != rhs.rows()) throw DimensionMismatch("right-hand side length");
  DenseMat<S> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = rhs;
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) throw InvalidArgument("inconsistent system");
  if (static_cast<Eigen::Index>(pivots.size()) != m.cols()) throw InvalidArgument("solution not unique");
  Vec<S> x(m.cols());
  for (Eigen::Index r = 0; r < m.cols(); ++r) x(r) = aug(r, m.cols());
  return x;
}

template <class S>
DenseMat<S> inverse(const DenseMat<S>& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  DenseMat<S> aug = DenseMat<S>::Constant(n, 2 * n, S(0));
  aug.leftCols(n) = m;
  for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = S(1);
  const auto pivots = rref(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[n - 1] >= n) {
    throw DivisionByZero();
  }
  return aug.rightCols(n);
}

/// Coefficients c_0..c_n of det(xI - m), by Faddeev-LeVerrier.
template <class S>
std::vector<S> char_poly(const DenseMat<S>& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw DimensionMismatch("characteristic polynomial of non-square matrix");
  std::vector<S> c(static_cast<std::size_t>(n + 1), S(0));
  c[static_cast<std::size_t>(n)] = S(1);
  DenseMat<S> mk = DenseMat<S>::Constant(n, n, S(0));
  DenseMat<S> id = DenseMat<S>::Constant(n, n, S(0));
  for (Eigen::Index i = 0; i < n; ++i) id(i, i) = S(1);
  for (Eigen::Index k = 1; k <= n; ++k) {
    DenseMat<S> shifted = mk + id * c[static_cast<std::size_t>(n - k + 1)];
    mk = m * shifted;
    S tr(0);
    for (Eigen::Index i = 0; i < n; ++i) tr += mk(i, i);
    c[static_cast<std::size_t>(n - k)] = -tr / S(static_cast<int>(k));
  }
  return c;
}

}  // namespace beauville
