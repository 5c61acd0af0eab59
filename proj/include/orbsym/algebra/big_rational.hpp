#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace orbsym {

using BigInt = mpz_class;

// Arbitrary-precision rational kept in lowest terms with a positive
// denominator. Thin value wrapper over GMP's mpq_class that hides the
// expression templates so it can serve as a scalar in generic code.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& num, const BigInt& den);
  BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

  // Accepts "p" or "p/q" with optional sign.
  static BigRational parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }

  std::string str() const { return v_.get_str(); }
  const mpq_class& raw() const { return v_; }

  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) {
    BigRational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
  friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.str(); }

 private:
  mpq_class v_;
};

inline bool is_zero(const BigRational& q) { return q.is_zero(); }

BigRational pow(const BigRational& base, long exponent);
BigInt factorial(unsigned n);

std::size_t hash_value(const BigRational& q);

}  // namespace orbsym

template <>
struct std::hash<orbsym::BigRational> {
  std::size_t operator()(const orbsym::BigRational& q) const { return orbsym::hash_value(q); }
};
