#pragma once

#include <Eigen/Core>

#include "orbsym/algebra/big_rational.hpp"
#include "orbsym/algebra/gauss.hpp"
#include "orbsym/algebra/ratfunc2.hpp"

// Lets the exact scalars live inside Eigen matrices. Only storage, block
// access and coefficient-wise expressions are relied on; elimination and
// characteristic polynomials are done by the templates in linalg.hpp and
// char_poly.hpp, never by Eigen's floating-point decompositions.
namespace orbsym::detail {
template <class T>
struct ExactNumTraits : Eigen::GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Literal = T;
  using Nested = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32,
  };
  static inline T epsilon() { return T(0); }
  static inline T dummy_precision() { return T(0); }
  static inline int digits10() { return 0; }
};
}  // namespace orbsym::detail

namespace Eigen {
template <>
struct NumTraits<orbsym::BigRational> : orbsym::detail::ExactNumTraits<orbsym::BigRational> {};
template <>
struct NumTraits<orbsym::RatFunc2> : orbsym::detail::ExactNumTraits<orbsym::RatFunc2> {};
template <class S>
struct NumTraits<orbsym::Gauss<S>> : orbsym::detail::ExactNumTraits<orbsym::Gauss<S>> {};
}  // namespace Eigen

namespace orbsym {
template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = Mat<BigRational>;
using FuncMatrix = Mat<RatFunc2>;
}  // namespace orbsym
