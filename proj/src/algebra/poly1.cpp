#include "orbsym/algebra/poly1.hpp"

#include <sstream>

#include "orbsym/errors.hpp"

namespace orbsym {

Poly1::Poly1(BigRational c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly1::Poly1(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly1 Poly1::x() { return monomial(BigRational(1), 1); }

Poly1 Poly1::monomial(BigRational c, int degree) {
  std::vector<BigRational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return Poly1(std::move(v));
}

void Poly1::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BigRational Poly1::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return BigRational(0);
  return c_[static_cast<std::size_t>(k)];
}

Poly1 Poly1::derivative() const {
  std::vector<BigRational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * BigRational(static_cast<long>(k)));
  return Poly1(std::move(d));
}

Poly1 Poly1::monic() const {
  if (is_zero()) return *this;
  Poly1 r = *this;
  r *= BigRational(1) / leading();
  return r;
}

BigRational Poly1::evaluate(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Poly1::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    BigRational c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (!c.is_one()) os << c << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

Poly1& Poly1::operator+=(const Poly1& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly1& Poly1::operator*=(const Poly1& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<BigRational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly1& Poly1::operator*=(const BigRational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly1 operator-(const Poly1& a) {
  Poly1 r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b) {
  if (b.is_zero()) throw MalformedInput("polynomial division by zero");
  Poly1 q;
  Poly1 r = a;
  const BigRational inv_lead = BigRational(1) / b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Poly1 t = Poly1::monomial(r.leading() * inv_lead, r.degree() - b.degree());
    q += t;
    r -= t * b;
  }
  return {q, r};
}

Poly1 divide_exact(const Poly1& a, const Poly1& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw MalformedInput("inexact univariate polynomial division");
  return q;
}

Poly1 gcd(const Poly1& a, const Poly1& b) {
  Poly1 x = a;
  Poly1 y = b;
  while (!y.is_zero()) {
    Poly1 r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

}  // namespace orbsym
