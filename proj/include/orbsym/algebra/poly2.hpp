#pragma once

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "orbsym/algebra/big_rational.hpp"
#include "orbsym/algebra/poly1.hpp"

namespace orbsym {

// Exponent pair (deg t1, deg t2).
using Exp2 = std::pair<int, int>;

// Sparse polynomial in the equivariant parameters t1, t2 over Q.
// Terms are kept in descending lexicographic order with t1 major, so the
// first stored term is the leading term. Zero coefficients are never stored.
class Poly2 {
 public:
  using Terms = std::map<Exp2, BigRational, std::greater<Exp2>>;

  Poly2() = default;
  Poly2(BigRational c);  // NOLINT(google-explicit-constructor)
  Poly2(long c) : Poly2(BigRational(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly2 t1();
  static Poly2 t2();
  static Poly2 monomial(BigRational c, int e1, int e2);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Terms& terms() const { return terms_; }
  BigRational coeff(int e1, int e2) const;
  // Requires !is_zero().
  const BigRational& leading_coeff() const { return terms_.begin()->second; }
  const Exp2& leading_exp() const { return terms_.begin()->first; }
  int degree_t1() const;
  int degree_t2() const;
  int total_degree() const;

  BigRational evaluate(const BigRational& t1, const BigRational& t2) const;
  std::string str() const;

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Poly2& o);
  Poly2& operator*=(const BigRational& s);

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(Poly2 a, const BigRational& s) { return a *= s; }
  friend Poly2 operator*(const BigRational& s, Poly2 a) { return a *= s; }
  friend Poly2 operator-(const Poly2& a);
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }
  friend bool operator<(const Poly2& a, const Poly2& b) { return a.terms_ < b.terms_; }
  friend std::ostream& operator<<(std::ostream& os, const Poly2& p) { return os << p.str(); }

 private:
  void add_term(const Exp2& e, const BigRational& c);
  Terms terms_;
};

inline bool is_zero(const Poly2& p) { return p.is_zero(); }
Poly2 pow(const Poly2& p, unsigned exponent);

// Exact quotient if b divides a, nullopt otherwise. Throws on b == 0.
std::optional<Poly2> try_divide(const Poly2& a, const Poly2& b);
// Throws MalformedInput when the division is not exact.
Poly2 divide_exact(const Poly2& a, const Poly2& b);
// Greatest common divisor normalized to lex-leading coefficient 1, via
// content / primitive-part recursion on Q[t2][t1]. gcd(0, 0) = 0.
Poly2 gcd(const Poly2& a, const Poly2& b);

// Views p as a polynomial in t1 whose coefficients are polynomials in t2.
std::vector<Poly1> t1_coefficients(const Poly2& p);
Poly2 from_t1_coefficients(const std::vector<Poly1>& coeffs);

}  // namespace orbsym
