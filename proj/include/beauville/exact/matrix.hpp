#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <algorithm>
#include <cstddef>
#include <vector>

#include "beauville/error.hpp"
#include "beauville/exact/eigen_traits.hpp"

namespace beauville {

template <class S>
using SparseMat = Eigen::SparseMatrix<S>;
template <class S>
using DenseMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using Triplet = Eigen::Triplet<S>;

/// Drops explicitly stored zeros (cancellations leave them behind).
template <class S>
SparseMat<S> pruned(SparseMat<S> m) {
  m.prune([](Eigen::Index, Eigen::Index, const S& v) { return !is_zero(v); });
  m.makeCompressed();
  return m;
}

template <class S>
SparseMat<S> sparse_from(Eigen::Index rows, Eigen::Index cols,
                         const std::vector<Triplet<S>>& entries) {
  SparseMat<S> m(rows, cols);
  m.setFromTriplets(entries.begin(), entries.end());
  return pruned(std::move(m));
}

template <class S>
SparseMat<S> sparse_from(const DenseMat<S>& d) {
  std::vector<Triplet<S>> t;
  for (Eigen::Index j = 0; j < d.cols(); ++j) {
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
      if (!is_zero(d(i, j))) t.emplace_back(i, j, d(i, j));
    }
  }
  return sparse_from<S>(d.rows(), d.cols(), t);
}

template <class S>
DenseMat<S> dense_from(const SparseMat<S>& m) {
  DenseMat<S> d = DenseMat<S>::Constant(m.rows(), m.cols(), S(0));
  for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
    for (typename SparseMat<S>::InnerIterator it(m, k); it; ++it) d(it.row(), it.col()) = it.value();
  }
  return d;
}

template <class S>
SparseMat<S> identity(Eigen::Index n) {
  std::vector<Triplet<S>> t;
  for (Eigen::Index i = 0; i < n; ++i) t.emplace_back(i, i, S(1));
  return sparse_from<S>(n, n, t);
}

template <class S>
bool is_zero(const SparseMat<S>& m) {
  for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
    for (typename SparseMat<S>::InnerIterator it(m, k); it; ++it) {
      if (!is_zero(it.value())) return false;
    }
  }
  return true;
}

template <class S>
void require_same_shape(const SparseMat<S>& a, const SparseMat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix shapes " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
}

template <class S>
bool mat_equal(const SparseMat<S>& a, const SparseMat<S>& b) {
  require_same_shape(a, b);
  return is_zero(SparseMat<S>(a - b));
}

template <class S>
SparseMat<S> mat_add(const SparseMat<S>& a, const SparseMat<S>& b) {
  require_same_shape(a, b);
  return pruned<S>(a + b);
}

template <class S>
SparseMat<S> mat_sub(const SparseMat<S>& a, const SparseMat<S>& b) {
  require_same_shape(a, b);
  return pruned<S>(a - b);
}

template <class S>
SparseMat<S> mat_scale(const S& c, const SparseMat<S>& a) {
  if (is_zero(c)) return SparseMat<S>(a.rows(), a.cols());
  return pruned<S>(a * c);
}

/// a*b, or a*b - b*a when bracket is set, column by column with a dense
/// accumulator. Eigen's own sparse product builds a fresh GMP temporary per
/// multiply-add, which dominates runtime for exact scalars; here the scratch
/// values are reused.
template <class S>
SparseMat<S> product_reusing(const SparseMat<S>& a, const SparseMat<S>& b, bool bracket = false) {
  const Eigen::Index n = a.rows();
  std::vector<S> acc(static_cast<std::size_t>(n));
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  std::vector<Eigen::Index> rows;
  S tmp;
  SparseMat<S> out(a.rows(), b.cols());
  out.reserve(a.nonZeros() + b.nonZeros());
  const auto pass = [&](const SparseMat<S>& x, const SparseMat<S>& y, Eigen::Index j, bool subtract) {
    for (typename SparseMat<S>::InnerIterator yk(y, j); yk; ++yk) {
      for (typename SparseMat<S>::InnerIterator xi(x, yk.row()); xi; ++xi) {
        const auto i = static_cast<std::size_t>(xi.row());
        tmp = xi.value();
        tmp *= yk.value();
        if (!hit[i]) {
          hit[i] = 1;
          rows.push_back(xi.row());
          acc[i] = S();
        }
        if (subtract) {
          acc[i] -= tmp;
        } else {
          acc[i] += tmp;
        }
      }
    }
  };
  for (Eigen::Index j = 0; j < b.outerSize(); ++j) {
    rows.clear();
    pass(a, b, j, false);
    if (bracket) pass(b, a, j, true);
    std::sort(rows.begin(), rows.end());
    out.startVec(j);
    for (Eigen::Index i : rows) {
      const auto k = static_cast<std::size_t>(i);
      if (!is_zero(acc[k])) out.insertBack(i, j) = acc[k];
      hit[k] = 0;
    }
  }
  out.finalize();
  return out;
}

template <class S>
SparseMat<S> mat_mul(const SparseMat<S>& a, const SparseMat<S>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("inner dimensions differ");
  return product_reusing(a, b);
}

/// Commutator AB - BA of two square matrices of the same size.
template <class S>
SparseMat<S> mat_bracket(const SparseMat<S>& a, const SparseMat<S>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw DimensionMismatch("bracket needs square matrices of equal size");
  }
  return product_reusing(a, b, true);
}

/// Entrywise change of scalar type.
template <class T, class S, class F>
SparseMat<T> mat_map(const SparseMat<S>& m, F&& f) {
  std::vector<Triplet<T>> t;
  for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
    for (typename SparseMat<S>::InnerIterator it(m, k); it; ++it) {
      T v = f(it.value());
      if (!is_zero(v)) t.emplace_back(it.row(), it.col(), std::move(v));
    }
  }
  return sparse_from<T>(m.rows(), m.cols(), t);
}

template <class S>
S entry(const SparseMat<S>& m, Eigen::Index i, Eigen::Index j) {
  return m.coeff(i, j);
}

}  // namespace beauville
