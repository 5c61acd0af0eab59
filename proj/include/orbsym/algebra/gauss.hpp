#pragma once

#include <ostream>
#include <string>

#include "orbsym/algebra/big_rational.hpp"
#include "orbsym/errors.hpp"

namespace orbsym {

// re + i*im over an exact field Scalar, with i^2 = -1.
template <class Scalar>
struct Gauss {
  Scalar re{};
  Scalar im{};

  Gauss() = default;
  Gauss(Scalar real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  Gauss(Scalar real, Scalar imag) : re(std::move(real)), im(std::move(imag)) {}
  Gauss(long v) : re(Scalar(v)) {}  // NOLINT(google-explicit-constructor)

  static Gauss i() { return Gauss(Scalar(0), Scalar(1)); }

  bool is_real() const { return is_zero(im); }
  Gauss conj() const { return Gauss(re, -im); }

  Gauss& operator+=(const Gauss& o) { re += o.re; im += o.im; return *this; }
  Gauss& operator-=(const Gauss& o) { re -= o.re; im -= o.im; return *this; }
  Gauss& operator*=(const Gauss& o) {
    Scalar r = re * o.re - im * o.im;
    Scalar m = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(m);
    return *this;
  }
  Gauss& operator/=(const Gauss& o) {
    Scalar norm = o.re * o.re + o.im * o.im;
    if (is_zero(norm)) throw MalformedInput("division by zero Gaussian value");
    *this *= o.conj();
    re = re / norm;
    im = im / norm;
    return *this;
  }

  friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
  friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
  friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
  friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
  friend Gauss operator-(const Gauss& a) { return Gauss(-a.re, -a.im); }
  friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }
};

template <class Scalar>
bool is_zero(const Gauss<Scalar>& z) {
  return is_zero(z.re) && is_zero(z.im);
}

template <class Scalar>
std::ostream& operator<<(std::ostream& os, const Gauss<Scalar>& z) {
  if (z.is_real()) return os << z.re;
  return os << "(" << z.re << ")+i*(" << z.im << ")";
}

using GaussRational = Gauss<BigRational>;

}  // namespace orbsym
