#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "orbsym/algebra/poly2.hpp"

namespace orbsym {

// Element of Q(t1, t2) in canonical form: gcd(num, den) = 1 and den has
// lex-leading coefficient 1. Two canonical values are equal iff their
// numerators and denominators are equal, so == is structural.
class RatFunc2 {
 public:
  RatFunc2() : den_(1) {}
  RatFunc2(Poly2 num);  // NOLINT(google-explicit-constructor)
  RatFunc2(BigRational c) : RatFunc2(Poly2(std::move(c))) {}  // NOLINT(google-explicit-constructor)
  RatFunc2(long c) : RatFunc2(Poly2(c)) {}  // NOLINT(google-explicit-constructor)
  // Throws MalformedInput when den == 0.
  RatFunc2(Poly2 num, Poly2 den);

  static RatFunc2 t1() { return RatFunc2(Poly2::t1()); }
  static RatFunc2 t2() { return RatFunc2(Poly2::t2()); }
  // Parses expressions such as "(2*t1 - t2)/(t1*t2)" or "-3/4".
  static RatFunc2 parse(std::string_view text);

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // Requires is_constant().
  BigRational constant_value() const;

  // Throws EvaluationError at a pole.
  BigRational evaluate(const BigRational& t1, const BigRational& t2) const;

  // Canonical text "num" or "(num)/(den)"; t1-major monomial order.
  std::string str() const;

  RatFunc2& operator+=(const RatFunc2& o);
  RatFunc2& operator-=(const RatFunc2& o);
  RatFunc2& operator*=(const RatFunc2& o);
  RatFunc2& operator/=(const RatFunc2& o);

  friend RatFunc2 operator+(RatFunc2 a, const RatFunc2& b) { return a += b; }
  friend RatFunc2 operator-(RatFunc2 a, const RatFunc2& b) { return a -= b; }
  friend RatFunc2 operator*(RatFunc2 a, const RatFunc2& b) { return a *= b; }
  friend RatFunc2 operator/(RatFunc2 a, const RatFunc2& b) { return a /= b; }
  friend RatFunc2 operator-(const RatFunc2& a);
  friend bool operator==(const RatFunc2& a, const RatFunc2& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc2& a, const RatFunc2& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const RatFunc2& f) { return os << f.str(); }

 private:
  struct Canonical {};
  RatFunc2(Poly2 num, Poly2 den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Poly2 num_;
  Poly2 den_;
};

inline bool is_zero(const RatFunc2& f) { return f.is_zero(); }
RatFunc2 pow(const RatFunc2& f, int exponent);

// Canonical representative of num/den.
RatFunc2 ratfunc_normalize(const Poly2& num, const Poly2& den);

}  // namespace orbsym
