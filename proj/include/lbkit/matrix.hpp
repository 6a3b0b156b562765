#pragma once

#include <cstdint>

#include <Eigen/Core>

namespace lbkit {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Exact integer matrices. Presentation matrices here are tiny, so 64-bit
/// entries never come close to overflow.
using IntMatrix = MatrixX<std::int64_t>;
using IntVector = VectorX<std::int64_t>;

/// Elementary matrix I + factor * E_{row,col}.
template <typename Scalar>
MatrixX<Scalar> elementary(Eigen::Index size, Eigen::Index row, Eigen::Index col,
                           Scalar factor) {
  MatrixX<Scalar> e = MatrixX<Scalar>::Identity(size, size);
  e(row, col) += factor;
  return e;
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == m.cols() && m == m.transpose();
}

}  // namespace lbkit
