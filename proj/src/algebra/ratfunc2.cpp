#include "orbsym/algebra/ratfunc2.hpp"

#include <cctype>

#include "orbsym/errors.hpp"

namespace orbsym {

RatFunc2::RatFunc2(Poly2 num) : num_(std::move(num)), den_(1) {}

RatFunc2::RatFunc2(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw MalformedInput("rational function with zero denominator");
  normalize();
}

void RatFunc2::normalize() {
  if (num_.is_zero()) {
    den_ = Poly2(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly2 g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  const BigRational lead = den_.leading_coeff();
  if (!lead.is_one()) {
    const BigRational inv = BigRational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc2 ratfunc_normalize(const Poly2& num, const Poly2& den) { return RatFunc2(num, den); }

BigRational RatFunc2::constant_value() const {
  if (!is_constant()) throw MalformedInput("rational function '" + str() + "' is not a constant");
  return num_.coeff(0, 0) / den_.coeff(0, 0);
}

BigRational RatFunc2::evaluate(const BigRational& t1, const BigRational& t2) const {
  BigRational d = den_.evaluate(t1, t2);
  if (d.is_zero()) throw EvaluationError("pole of '" + str() + "' at (t1, t2) = (" + t1.str() + ", " + t2.str() + ")");
  return num_.evaluate(t1, t2) / d;
}

std::string RatFunc2::str() const {
  if (den_ == Poly2(1)) return num_.str();
  std::string n = num_.str();
  std::string d = den_.str();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  if (den_.terms().size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

RatFunc2& RatFunc2::operator+=(const RatFunc2& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  // Henrici: only the common part of the denominators can cancel.
  const Poly2 g = gcd(den_, o.den_);
  if (g.is_constant()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  const Poly2 bg = divide_exact(den_, g);
  const Poly2 dg = divide_exact(o.den_, g);
  Poly2 t = num_ * dg + o.num_ * bg;
  if (t.is_zero()) return *this = RatFunc2();
  const Poly2 g2 = gcd(t, g);
  num_ = g2.is_constant() ? std::move(t) : divide_exact(t, g2);
  den_ = bg * (g2.is_constant() ? o.den_ : divide_exact(o.den_, g2));
  const BigRational inv = BigRational(1) / den_.leading_coeff();
  if (!inv.is_one()) {
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

RatFunc2& RatFunc2::operator-=(const RatFunc2& o) { return *this += -o; }

RatFunc2& RatFunc2::operator*=(const RatFunc2& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc2();
  // Cross-cancel so the product is already reduced up to the scalar.
  Poly2 g1 = gcd(num_, o.den_);
  Poly2 g2 = gcd(o.num_, den_);
  auto cut = [](const Poly2& p, const Poly2& g) { return g.is_constant() ? p : divide_exact(p, g); };
  Poly2 n = cut(num_, g1) * cut(o.num_, g2);
  Poly2 d = cut(den_, g2) * cut(o.den_, g1);
  const BigRational inv = BigRational(1) / d.leading_coeff();
  num_ = n * inv;
  den_ = d * inv;
  return *this;
}

RatFunc2& RatFunc2::operator/=(const RatFunc2& o) {
  if (o.is_zero()) throw MalformedInput("division of a rational function by zero");
  return *this *= RatFunc2(o.den_, o.num_, Canonical{});
}

RatFunc2 operator-(const RatFunc2& a) { return RatFunc2(-a.num_, a.den_, RatFunc2::Canonical{}); }

RatFunc2 pow(const RatFunc2& f, int exponent) {
  if (exponent < 0) return pow(RatFunc2(1) / f, -exponent);
  RatFunc2 result(1);
  for (int k = 0; k < exponent; ++k) result *= f;
  return result;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  RatFunc2 parse() {
    RatFunc2 v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw MalformedInput("cannot parse rational function '" + std::string(s_) + "': " + what + " at offset " +
                         std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc2 expr() {
    RatFunc2 v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  RatFunc2 term() {
    RatFunc2 v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        RatFunc2 d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  RatFunc2 unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFunc2 power() {
    RatFunc2 base = atom();
    if (accept('^')) {
      bool neg = accept('-');
      skip();
      long e = integer();
      if (neg && base.is_zero()) fail("zero to a negative power");
      base = pow(base, static_cast<int>(neg ? -e : e));
    }
    return base;
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  RatFunc2 atom() {
    skip();
    if (accept('(')) {
      RatFunc2 v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc2(BigRational(BigInt(std::string(s_.substr(start, pos_ - start)))));
    }
    if (s_.substr(pos_, 2) == "t1") {
      pos_ += 2;
      return RatFunc2::t1();
    }
    if (s_.substr(pos_, 2) == "t2") {
      pos_ += 2;
      return RatFunc2::t2();
    }
    fail("expected number, t1, t2 or '('");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc2 RatFunc2::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace orbsym
