#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "orbsym/algebra/big_rational.hpp"

namespace orbsym {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The leading stored coefficient is nonzero; the zero polynomial is empty.
class Poly1 {
 public:
  Poly1() = default;
  Poly1(BigRational c);  // NOLINT(google-explicit-constructor)
  Poly1(long c) : Poly1(BigRational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly1(std::vector<BigRational> coeffs);

  static Poly1 x();
  static Poly1 monomial(BigRational c, int degree);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<BigRational>& coeffs() const { return c_; }
  BigRational coeff(int k) const;
  const BigRational& leading() const { return c_.back(); }

  Poly1 derivative() const;
  Poly1 monic() const;
  BigRational evaluate(const BigRational& x) const;

  std::string str(const std::string& var = "x") const;

  Poly1& operator+=(const Poly1& o);
  Poly1& operator-=(const Poly1& o);
  Poly1& operator*=(const Poly1& o);
  Poly1& operator*=(const BigRational& s);

  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(Poly1 a, const Poly1& b) { return a *= b; }
  friend Poly1 operator*(Poly1 a, const BigRational& s) { return a *= s; }
  friend Poly1 operator-(const Poly1& a);
  friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const Poly1& p) { return os << p.str(); }

 private:
  void trim();
  std::vector<BigRational> c_;
};

inline bool is_zero(const Poly1& p) { return p.is_zero(); }

// Quotient and remainder of a by b over Q. Throws on b == 0.
std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b);
// Throws MalformedInput if b does not divide a.
Poly1 divide_exact(const Poly1& a, const Poly1& b);
// Monic gcd; gcd(0, 0) = 0.
Poly1 gcd(const Poly1& a, const Poly1& b);

}  // namespace orbsym
