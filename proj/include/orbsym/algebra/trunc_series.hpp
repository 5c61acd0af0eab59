#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "orbsym/algebra/ratfunc2.hpp"
#include "orbsym/errors.hpp"

namespace orbsym {

// Truncation orders: u-degree <= u_order and s_k-degree <= s_orders[k-1].
struct SeriesOrders {
  int u_order = 0;
  std::vector<int> s_orders;

  int r() const { return static_cast<int>(s_orders.size()); }
  friend bool operator==(const SeriesOrders&, const SeriesOrders&) = default;
};

// Exponent vector (a, d_1, ..., d_r) of u^a s_1^d_1 ... s_r^d_r.
using SeriesExp = std::vector<int>;

namespace detail {
// Free-function lookup from inside a class that has its own is_zero member.
template <class T>
bool coeff_is_zero(const T& c) {
  return is_zero(c);
}
}  // namespace detail

// Truncated power series in u, s_1..s_r with coefficients in a field Scalar.
// Only in-range monomials are stored and zero coefficients are dropped.
template <class Scalar>
class TruncSeries {
 public:
  using Terms = std::map<SeriesExp, Scalar>;

  TruncSeries() = default;
  explicit TruncSeries(SeriesOrders orders) : orders_(std::move(orders)) {
    if (orders_.u_order < 0) throw ShapeError("negative u truncation order");
    for (int d : orders_.s_orders) {
      if (d < 0) throw ShapeError("negative s truncation order");
    }
  }

  static TruncSeries constant(SeriesOrders orders, const Scalar& c) {
    TruncSeries s(std::move(orders));
    s.set(s.zero_exp(), c);
    return s;
  }

  static TruncSeries monomial(SeriesOrders orders, const SeriesExp& e, const Scalar& c) {
    TruncSeries s(std::move(orders));
    s.add_to(e, c);
    return s;
  }

  const SeriesOrders& orders() const { return orders_; }
  int r() const { return orders_.r(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  SeriesExp zero_exp() const { return SeriesExp(static_cast<std::size_t>(r()) + 1, 0); }

  bool in_range(const SeriesExp& e) const {
    if (e.size() != static_cast<std::size_t>(r()) + 1) return false;
    if (e[0] < 0 || e[0] > orders_.u_order) return false;
    for (int k = 0; k < r(); ++k) {
      if (e[k + 1] < 0 || e[k + 1] > orders_.s_orders[k]) return false;
    }
    return true;
  }

  Scalar coeff(const SeriesExp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar{} : it->second;
  }

  // Out-of-range monomials are silently truncated.
  void set(const SeriesExp& e, const Scalar& c) {
    if (!in_range(e)) return;
    if (detail::coeff_is_zero(c)) {
      terms_.erase(e);
    } else {
      terms_[e] = c;
    }
  }

  void add_to(const SeriesExp& e, const Scalar& c) {
    if (!in_range(e) || detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    check_orders(o);
    for (const auto& [e, c] : o.terms_) add_to(e, c);
    return *this;
  }

  TruncSeries& operator-=(const TruncSeries& o) {
    check_orders(o);
    for (const auto& [e, c] : o.terms_) add_to(e, -c);
    return *this;
  }

  TruncSeries& operator*=(const Scalar& s) {
    if (detail::coeff_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const Scalar& s) { return a *= s; }
  friend TruncSeries operator-(TruncSeries a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_orders(b);
    TruncSeries out(a.orders_);
    SeriesExp e(a.zero_exp());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        if (out.in_range(e)) out.add_to(e, ca * cb);
      }
    }
    return out;
  }

  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.orders_ == b.orders_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

  // Restricts to smaller orders.
  TruncSeries truncated(const SeriesOrders& to) const {
    if (to.r() != r()) throw ShapeError("truncation changes the number of s variables");
    TruncSeries out(to);
    for (const auto& [e, c] : terms_) out.add_to(e, c);
    return out;
  }

  // Multiplicative inverse; the constant term must be invertible.
  TruncSeries inverse() const {
    const Scalar c0 = coeff(zero_exp());
    if (detail::coeff_is_zero(c0)) throw PoleAtOrigin("series has no invertible constant term");
    const Scalar inv0 = Scalar(1) / c0;
    // 1/(c0 (1 + g)) with g nilpotent in the truncated ring.
    TruncSeries g = *this * inv0;
    g.set(zero_exp(), Scalar{});
    TruncSeries neg_g = -g;
    TruncSeries sum = constant(orders_, Scalar(1));
    TruncSeries power = constant(orders_, Scalar(1));
    int max_steps = orders_.u_order;
    for (int d : orders_.s_orders) max_steps += d;
    for (int step = 0; step < max_steps && !power.is_zero(); ++step) {
      power = power * neg_g;
      sum += power;
    }
    return sum * inv0;
  }

 private:
  void check_orders(const TruncSeries& o) const {
    if (!(orders_ == o.orders_)) throw ShapeError("truncation orders of series operands differ");
  }

  SeriesOrders orders_;
  Terms terms_;
};

template <class Scalar>
bool is_zero(const TruncSeries<Scalar>& s) {
  return s.is_zero();
}

using Series = TruncSeries<RatFunc2>;

// d/du: the u^a coefficient becomes (a+1) times the u^{a+1} coefficient and
// the u order drops by one. Throws EmptyOrder when u_order == 0.
template <class Scalar>
TruncSeries<Scalar> series_d_du(const TruncSeries<Scalar>& f) {
  if (f.orders().u_order == 0) throw EmptyOrder("d/du of a series truncated at u order 0");
  SeriesOrders lowered = f.orders();
  lowered.u_order -= 1;
  TruncSeries<Scalar> out(lowered);
  for (const auto& [e, c] : f.terms()) {
    if (e[0] == 0) continue;
    SeriesExp d = e;
    d[0] -= 1;
    out.add_to(d, c * Scalar(static_cast<long>(e[0])));
  }
  return out;
}

// s_l d/ds_l, l in 1..r. Degree-preserving, so orders are unchanged.
template <class Scalar>
TruncSeries<Scalar> series_s_scale_d(const TruncSeries<Scalar>& f, int l) {
  if (l < 1 || l > f.r()) {
    throw IndexOutOfRange("s index " + std::to_string(l) + " outside 1.." + std::to_string(f.r()));
  }
  TruncSeries<Scalar> out(f.orders());
  for (const auto& [e, c] : f.terms()) {
    if (e[static_cast<std::size_t>(l)] == 0) continue;
    out.add_to(e, c * Scalar(static_cast<long>(e[static_cast<std::size_t>(l)])));
  }
  return out;
}

enum class SeriesOp { Add, Sub, Mul };

template <class Scalar>
TruncSeries<Scalar> series_arith(const TruncSeries<Scalar>& a, const TruncSeries<Scalar>& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::Add:
      return a + b;
    case SeriesOp::Sub:
      return a - b;
    case SeriesOp::Mul:
      return a * b;
  }
  throw MalformedInput("unknown series operation");
}

std::string exp_str(const SeriesExp& e);

template <class Scalar>
std::ostream& operator<<(std::ostream& os, const TruncSeries<Scalar>& s) {
  if (s.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c << "]*" << exp_str(e);
  }
  return os;
}

}  // namespace orbsym
