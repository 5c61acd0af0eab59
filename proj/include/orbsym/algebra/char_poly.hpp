#pragma once

#include <utility>
#include <vector>

#include "orbsym/algebra/numtraits.hpp"
#include "orbsym/algebra/poly1.hpp"
#include "orbsym/errors.hpp"

namespace orbsym {

// Coefficients of det(x I - m), lowest degree first, by Berkowitz's
// division-free algorithm, so it works over any commutative ring.
template <class Scalar>
std::vector<Scalar> char_poly_coeffs(const Mat<Scalar>& m) {
  if (m.rows() != m.cols()) {
    throw ShapeError("characteristic polynomial of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     " matrix");
  }
  const Eigen::Index n = m.rows();
  // c holds the polynomial of the leading k x k block, highest degree first.
  std::vector<Scalar> c{Scalar(1)};
  for (Eigen::Index k = 0; k < n; ++k) {
    // t = (1, -a_kk, -R S, -R M S, ..., -R M^{k-1} S) for the block bordered by row/column k.
    std::vector<Scalar> t{Scalar(1), -m(k, k)};
    std::vector<Scalar> v(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = m(i, k);
    for (Eigen::Index p = 0; p < k; ++p) {
      Scalar dot(0);
      for (Eigen::Index j = 0; j < k; ++j) dot = dot + m(k, j) * v[static_cast<std::size_t>(j)];
      t.push_back(-dot);
      std::vector<Scalar> next(static_cast<std::size_t>(k), Scalar(0));
      for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
          next[static_cast<std::size_t>(i)] = next[static_cast<std::size_t>(i)] + m(i, j) * v[static_cast<std::size_t>(j)];
        }
      }
      v = std::move(next);
    }
    // New coefficients = lower-triangular Toeplitz(t) times c.
    std::vector<Scalar> nc(c.size() + 1, Scalar(0));
    for (std::size_t i = 0; i < nc.size(); ++i) {
      for (std::size_t j = 0; j < c.size() && j <= i; ++j) {
        if (i - j < t.size()) nc[i] = nc[i] + t[i - j] * c[j];
      }
    }
    c = std::move(nc);
  }
  return {c.rbegin(), c.rend()};
}

Poly1 char_poly(const Mat<BigRational>& m);
// Characteristic polynomial of a Gaussian matrix; throws RealnessViolation
// unless it has rational coefficients.
Poly1 char_poly(const Mat<GaussRational>& m);

// (characteristic polynomial, gcd(p, p') is constant).
std::pair<Poly1, bool> char_poly_squarefree(const Mat<BigRational>& m);
std::pair<Poly1, bool> char_poly_squarefree(const Mat<GaussRational>& m);
bool is_squarefree(const Poly1& p);

}  // namespace orbsym
