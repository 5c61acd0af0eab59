#include "orbsym/algebra/poly2.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "orbsym/errors.hpp"

namespace orbsym {

Poly2::Poly2(BigRational c) {
  if (!c.is_zero()) terms_.emplace(Exp2{0, 0}, std::move(c));
}

Poly2 Poly2::t1() { return monomial(BigRational(1), 1, 0); }
Poly2 Poly2::t2() { return monomial(BigRational(1), 0, 1); }

Poly2 Poly2::monomial(BigRational c, int e1, int e2) {
  Poly2 p;
  if (!c.is_zero()) p.terms_.emplace(Exp2{e1, e2}, std::move(c));
  return p;
}

bool Poly2::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp2{0, 0});
}

BigRational Poly2::coeff(int e1, int e2) const {
  auto it = terms_.find({e1, e2});
  return it == terms_.end() ? BigRational(0) : it->second;
}

int Poly2::degree_t1() const { return terms_.empty() ? -1 : terms_.begin()->first.first; }

int Poly2::degree_t2() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

int Poly2::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

BigRational Poly2::evaluate(const BigRational& t1, const BigRational& t2) const {
  BigRational acc(0);
  for (const auto& [e, c] : terms_) acc += c * pow(t1, e.first) * pow(t2, e.second);
  return acc;
}

std::string Poly2::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, coeff] : terms_) {
    BigRational c = coeff;
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (!c.is_one() || (e.first == 0 && e.second == 0)) {
      os << c;
      need_star = true;
    }
    if (e.first > 0) {
      os << (need_star ? "*" : "") << "t1";
      if (e.first > 1) os << "^" << e.first;
      need_star = true;
    }
    if (e.second > 0) {
      os << (need_star ? "*" : "") << "t2";
      if (e.second > 1) os << "^" << e.second;
    }
  }
  return os.str();
}

void Poly2::add_term(const Exp2& e, const BigRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  }
  return r;
}

Poly2& Poly2::operator*=(const Poly2& o) { return *this = *this * o; }

Poly2& Poly2::operator*=(const BigRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Poly2 operator-(const Poly2& a) {
  Poly2 r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly2 pow(const Poly2& p, unsigned exponent) {
  Poly2 result(1);
  Poly2 b = p;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::optional<Poly2> try_divide(const Poly2& a, const Poly2& b) {
  if (b.is_zero()) throw MalformedInput("polynomial division by zero");
  if (b.is_constant()) return a * (BigRational(1) / b.leading_coeff());
  if (a.is_zero()) return Poly2();
  Poly2 q;
  Poly2 r = a;
  const Exp2 lb = b.leading_exp();
  const BigRational inv = BigRational(1) / b.leading_coeff();
  while (!r.is_zero()) {
    const Exp2 lr = r.leading_exp();
    if (lr.first < lb.first || lr.second < lb.second) return std::nullopt;
    Poly2 t = Poly2::monomial(r.leading_coeff() * inv, lr.first - lb.first, lr.second - lb.second);
    q += t;
    r -= t * b;
  }
  return q;
}

Poly2 divide_exact(const Poly2& a, const Poly2& b) {
  auto q = try_divide(a, b);
  if (!q) throw MalformedInput("inexact polynomial division: (" + a.str() + ") / (" + b.str() + ")");
  return *q;
}

std::vector<Poly1> t1_coefficients(const Poly2& p) {
  std::vector<Poly1> out(static_cast<std::size_t>(std::max(p.degree_t1() + 1, 0)));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e.first)] += Poly1::monomial(c, e.second);
  return out;
}

Poly2 from_t1_coefficients(const std::vector<Poly1>& coeffs) {
  Poly2 p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto& cs = coeffs[k].coeffs();
    for (std::size_t j = 0; j < cs.size(); ++j) {
      p += Poly2::monomial(cs[j], static_cast<int>(k), static_cast<int>(j));
    }
  }
  return p;
}

namespace {

using UPoly = std::vector<Poly1>;  // in t1 over Q[t2]

void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Poly1 content(const UPoly& a) {
  Poly1 g;
  for (const auto& c : a) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

UPoly divide_coeffs(const UPoly& a, const Poly1& c) {
  UPoly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(divide_exact(x, c));
  return r;
}

UPoly primitive_part(const UPoly& a) {
  Poly1 c = content(a);
  if (c.is_zero()) return a;
  return divide_coeffs(a, c);
}

// Pseudo-remainder of a by b in t1; both nonzero.
UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const Poly1& lb = b.back();
  trim(a);
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const Poly1 la = a.back();
    for (auto& c : a) c *= lb;
    for (int k = 0; k <= db; ++k) a[static_cast<std::size_t>(k + shift)] -= la * b[static_cast<std::size_t>(k)];
    trim(a);
  }
  return a;
}

Poly2 lex_monic(const Poly2& p) {
  if (p.is_zero()) return p;
  return p * (BigRational(1) / p.leading_coeff());
}

// Total degree if every term has it, -1 otherwise.
int homogeneous_degree(const Poly2& p) {
  int d = -1;
  for (const auto& [e, c] : p.terms()) {
    const int k = e.first + e.second;
    if (d >= 0 && k != d) return -1;
    d = k;
  }
  return d;
}

// Homogeneous gcd through the chart t2 = 1: strip the t2 power, take the
// univariate gcd in t1 and homogenize back.
Poly2 homogeneous_gcd(const Poly2& a, const Poly2& b) {
  auto dehom = [](const Poly2& p, int& v2) {
    v2 = std::numeric_limits<int>::max();
    for (const auto& [e, c] : p.terms()) v2 = std::min(v2, e.second);
    std::vector<BigRational> cs(static_cast<std::size_t>(p.degree_t1() + 1));
    for (const auto& [e, c] : p.terms()) cs[static_cast<std::size_t>(e.first)] = c;
    return Poly1(std::move(cs));
  };
  int va = 0;
  int vb = 0;
  const Poly1 g = gcd(dehom(a, va), dehom(b, vb));
  const int e = g.degree();
  Poly2 out;
  for (int k = 0; k <= e; ++k) {
    const BigRational& c = g.coeffs()[static_cast<std::size_t>(k)];
    if (!c.is_zero()) out += Poly2::monomial(c, k, e - k + std::min(va, vb));
  }
  return out;
}

}  // namespace

Poly2 gcd(const Poly2& a, const Poly2& b) {
  if (a.is_zero()) return lex_monic(b);
  if (b.is_zero()) return lex_monic(a);
  if (a.is_constant() || b.is_constant()) return Poly2(1);
  // A monomial only shares the smallest powers of t1 and t2 present in the other side.
  if (a.terms().size() == 1 || b.terms().size() == 1) {
    int e1 = std::numeric_limits<int>::max();
    int e2 = std::numeric_limits<int>::max();
    for (const auto* p : {&a, &b}) {
      for (const auto& [e, c] : p->terms()) {
        e1 = std::min(e1, e.first);
        e2 = std::min(e2, e.second);
      }
    }
    return Poly2::monomial(BigRational(1), e1, e2);
  }
  if (homogeneous_degree(a) >= 0 && homogeneous_degree(b) >= 0) return lex_monic(homogeneous_gcd(a, b));
  if (a.total_degree() >= b.total_degree()) {
    if (try_divide(a, b)) return lex_monic(b);
  } else if (try_divide(b, a)) {
    return lex_monic(a);
  }

  UPoly x = t1_coefficients(a);
  UPoly y = t1_coefficients(b);
  const Poly1 cx = content(x);
  const Poly1 cy = content(y);
  const Poly1 c = gcd(cx, cy);
  x = divide_coeffs(x, cx);
  y = divide_coeffs(y, cy);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    UPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.empty() ? UPoly{} : primitive_part(r);
  }
  x = primitive_part(x);
  UPoly scaled;
  for (const auto& coeff : x) scaled.push_back(coeff * c);
  return lex_monic(from_t1_coefficients(scaled));
}

}  // namespace orbsym
