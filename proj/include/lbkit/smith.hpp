#pragma once

#include <cstdlib>
#include <utility>

#include <Eigen/Core>

#include "lbkit/matrix.hpp"

namespace lbkit {

/// Result of a Smith normal form computation: left * input * right == diagonal,
/// with left and right unimodular and the diagonal a divisibility chain of
/// non-negative entries.
///
/// Storage types keep the compile-time maximum sizes of the input, so a
/// `Matrix<int64_t, Dynamic, Dynamic, 0, 3, 3>` input never touches the heap.
template <typename Derived>
struct SmithForm {
  using Scalar = typename Derived::Scalar;
  static constexpr int MaxRows = Derived::MaxRowsAtCompileTime;
  static constexpr int MaxCols = Derived::MaxColsAtCompileTime;

  using DiagonalType =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, MaxRows, MaxCols>;
  using LeftType =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, MaxRows, MaxRows>;
  using RightType =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, MaxCols, MaxCols>;

  DiagonalType diagonal;
  LeftType left;
  RightType right;

  /// Number of non-zero diagonal entries.
  Eigen::Index rank() const {
    Eigen::Index r = 0;
    const Eigen::Index n = std::min(diagonal.rows(), diagonal.cols());
    while (r < n && diagonal(r, r) != 0) ++r;
    return r;
  }
};

namespace detail {

template <typename Scalar>
Scalar abs_value(Scalar x) {
  return x < 0 ? -x : x;
}

}  // namespace detail

/// Smith normal form by elementary row and column operations.
///
/// Pivot choice: the smallest non-zero absolute value in the active block,
/// ties broken by lowest row and then lowest column. This makes left and
/// right reproducible for a given input.
template <typename Derived>
SmithForm<Derived> smith_normal_form(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;

  SmithForm<Derived> out;
  auto& d = out.diagonal;
  auto& u = out.left;
  auto& v = out.right;
  const Index rows = input.rows();
  const Index cols = input.cols();
  d = input;
  u.setIdentity(rows, rows);
  v.setIdentity(cols, cols);

  auto swap_rows = [&](Index a, Index b) {
    if (a == b) return;
    d.row(a).swap(d.row(b));
    u.row(a).swap(u.row(b));
  };
  auto swap_cols = [&](Index a, Index b) {
    if (a == b) return;
    d.col(a).swap(d.col(b));
    v.col(a).swap(v.col(b));
  };
  // row(target) += factor * row(source)
  auto add_row = [&](Index target, Index source, Scalar factor) {
    d.row(target) += factor * d.row(source);
    u.row(target) += factor * u.row(source);
  };
  auto add_col = [&](Index target, Index source, Scalar factor) {
    d.col(target) += factor * d.col(source);
    v.col(target) += factor * v.col(source);
  };

  const Index steps = std::min(rows, cols);
  for (Index t = 0; t < steps; ++t) {
    // Smallest non-zero entry of the active block.
    Index pr = -1, pc = -1;
    Scalar best = 0;
    for (Index i = t; i < rows; ++i) {
      for (Index j = t; j < cols; ++j) {
        const Scalar a = detail::abs_value(d(i, j));
        if (a != 0 && (pr < 0 || a < best)) {
          best = a;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        add_row(i, t, -(d(i, t) / d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        add_col(j, t, -(d(t, j) / d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder survived: it is smaller than the pivot, so move the
        // smallest remaining entry of row/column t into the pivot slot.
        Index bi = t, bj = t;
        Scalar b = detail::abs_value(d(t, t));
        for (Index i = t + 1; i < rows; ++i) {
          const Scalar a = detail::abs_value(d(i, t));
          if (a != 0 && a < b) {
            b = a;
            bi = i;
            bj = t;
          }
        }
        for (Index j = t + 1; j < cols; ++j) {
          const Scalar a = detail::abs_value(d(t, j));
          if (a != 0 && a < b) {
            b = a;
            bi = t;
            bj = j;
          }
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility on the rest.
      Index bad = -1;
      for (Index i = t + 1; i < rows && bad < 0; ++i) {
        for (Index j = t + 1; j < cols; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      add_row(t, bad, Scalar{1});
    }
    if (d(t, t) < 0) {
      d.row(t) = -d.row(t);
      u.row(t) = -u.row(t);
    }
  }
  return out;
}

}  // namespace lbkit
