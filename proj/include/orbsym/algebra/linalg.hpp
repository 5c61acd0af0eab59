#pragma once

#include "orbsym/algebra/numtraits.hpp"
#include "orbsym/errors.hpp"

namespace orbsym {

// Solves a x = b exactly by Gauss-Jordan elimination over a field.
// Throws DegenerateBasis when a is singular.
template <class Scalar>
Mat<Scalar> solve_exact(Mat<Scalar> a, Mat<Scalar> b) {
  if (a.rows() != a.cols() || b.rows() != a.rows()) throw ShapeError("solve_exact: shape mismatch");
  const Eigen::Index n = a.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    while (piv < n && is_zero(a(piv, col))) ++piv;
    if (piv == n) throw DegenerateBasis("singular matrix at column " + std::to_string(col + 1));
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      b.row(piv).swap(b.row(col));
    }
    const Scalar inv = Scalar(1) / a(col, col);
    for (Eigen::Index j = 0; j < n; ++j) a(col, j) = a(col, j) * inv;
    for (Eigen::Index j = 0; j < b.cols(); ++j) b(col, j) = b(col, j) * inv;
    for (Eigen::Index row = 0; row < n; ++row) {
      if (row == col || is_zero(a(row, col))) continue;
      const Scalar f = a(row, col);
      for (Eigen::Index j = 0; j < n; ++j) a(row, j) = a(row, j) - f * a(col, j);
      for (Eigen::Index j = 0; j < b.cols(); ++j) b(row, j) = b(row, j) - f * b(col, j);
    }
  }
  return b;
}

template <class Scalar>
Mat<Scalar> inverse_exact(const Mat<Scalar>& a) {
  Mat<Scalar> id = Mat<Scalar>::Constant(a.rows(), a.rows(), Scalar(0));
  for (Eigen::Index k = 0; k < a.rows(); ++k) id(k, k) = Scalar(1);
  return solve_exact(a, id);
}

// Plain triple loop; avoids Eigen's blocked kernels for non-POD scalars.
template <class Scalar>
Mat<Scalar> multiply(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  if (a.cols() != b.rows()) throw ShapeError("multiply: inner dimensions differ");
  Mat<Scalar> c = Mat<Scalar>::Constant(a.rows(), b.cols(), Scalar(0));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) c(i, j) = c(i, j) + a(i, k) * b(k, j);
    }
  }
  return c;
}

}  // namespace orbsym
