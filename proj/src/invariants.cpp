#include "orbsym/invariants.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "orbsym/chenruan.hpp"
#include "orbsym/errors.hpp"
#include "orbsym/hurwitz.hpp"

namespace orbsym {

DivisorSymbol DivisorSymbol::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s += c;
  }
  if (s == "(2)" || s == "2") return twisted();
  if (s == "1") return identity();
  if (s.size() >= 2 && (s[0] == 'D' || s[0] == 'd')) {
    int l = 0;
    for (std::size_t k = 1; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') throw MalformedInput("bad divisor symbol '" + std::string(text) + "'");
      l = l * 10 + (s[k] - '0');
    }
    if (l < 1) throw MalformedInput("divisor index must be positive in '" + std::string(text) + "'");
    return untwisted(l);
  }
  throw MalformedInput("bad divisor symbol '" + std::string(text) + "' (expected (2), D<l> or 1)");
}

std::string DivisorSymbol::str() const {
  switch (kind) {
    case Kind::Twisted:
      return "(2)";
    case Kind::Untwisted:
      return "D" + std::to_string(index);
    case Kind::Identity:
      return "1";
  }
  return "?";
}

WeightedPartition DivisorSymbol::as_class(int n) const {
  std::vector<WeightedPart> parts;
  switch (kind) {
    case Kind::Twisted:
      if (n < 2) throw ShapeError("(2) needs n >= 2");
      parts.assign(static_cast<std::size_t>(n - 2), {1, ClassLabel::one()});
      parts.emplace_back(2, ClassLabel::one());
      break;
    case Kind::Untwisted:
      if (n < 1) throw ShapeError("D_l needs n >= 1");
      parts.assign(static_cast<std::size_t>(n - 1), {1, ClassLabel::one()});
      parts.emplace_back(1, ClassLabel::omega(index));
      break;
    case Kind::Identity:
      parts.assign(static_cast<std::size_t>(n), {1, ClassLabel::one()});
      break;
  }
  return WeightedPartition(std::move(parts));
}

std::string ZeroDegreeTable::key(const WeightedPartition& a1, const DivisorSymbol& d, const WeightedPartition& a2) {
  return "(" + a1.str() + "|" + d.str() + "|" + a2.str() + ")";
}

void ZeroDegreeTable::set(const WeightedPartition& a1, const DivisorSymbol& d, const WeightedPartition& a2, Entry e) {
  entries_[key(a1, d, a2)] = std::move(e);
}

std::optional<ZeroDegreeTable::Entry> ZeroDegreeTable::find(const WeightedPartition& a1, const DivisorSymbol& d,
                                                             const WeightedPartition& a2) const {
  if (auto it = entries_.find(key(a1, d, a2)); it != entries_.end()) return it->second;
  if (auto it = entries_.find(key(a2, d, a1)); it != entries_.end()) return it->second;
  return std::nullopt;
}

std::string ZeroDegreeTable::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, e] : entries_) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& [a, c] : e) list.push_back({a, c.str()});
    j[k] = list;
  }
  return j.dump(2);
}

ZeroDegreeTable ZeroDegreeTable::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("zero-degree table is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw MalformedInput("zero-degree table must be a JSON object");
  ZeroDegreeTable t;
  for (const auto& [k, v] : j.items()) {
    if (k.size() < 2 || k.front() != '(' || k.back() != ')') throw MalformedInput("bad table key '" + k + "'");
    const std::string inner = k.substr(1, k.size() - 2);
    const auto p1 = inner.find('|');
    const auto p2 = p1 == std::string::npos ? std::string::npos : inner.find('|', p1 + 1);
    if (p2 == std::string::npos) throw MalformedInput("table key '" + k + "' needs the form (a1|D|a2)");
    const auto a1 = WeightedPartition::parse(inner.substr(0, p1));
    const auto d = DivisorSymbol::parse(inner.substr(p1 + 1, p2 - p1 - 1));
    const auto a2 = WeightedPartition::parse(inner.substr(p2 + 1));
    if (!v.is_array()) throw MalformedInput("table entry '" + k + "' must be a list of [a, value] pairs");
    Entry e;
    for (const auto& item : v) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_string()) {
        throw MalformedInput("table entry '" + k + "' has an item that is not [a, \"value\"]");
      }
      e.emplace_back(item[0].get<int>(), RatFunc2::parse(item[1].get<std::string>()));
    }
    t.set(a1, d, a2, std::move(e));
  }
  return t;
}

ZeroDegreeTable ZeroDegreeTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open table file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

void ZeroDegreeTable::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw MalformedInput("cannot write table file '" + path + "'");
  out << to_json() << "\n";
}

namespace {

void require_divisor_weights(const WeightedPartition& p) {
  for (const auto& [part, label] : p.parts()) {
    if (!label.is_divisor_or_one()) {
      throw UnsupportedWeight("weight " + label.str() + " in " + p.str() + " is not 1 or a divisor");
    }
  }
}

}  // namespace

Poly2 connected_two_point(const WeightedPartition& mu, const WeightedPartition& nu, const TwistedDegree& t,
                          const TangentWeights& w) {
  require_divisor_weights(mu);
  require_divisor_weights(nu);
  if (mu.size() != nu.size()) throw ShapeError("connected invariant of " + mu.str() + " and " + nu.str());
  if (t.beta.d.size() != static_cast<std::size_t>(w.r)) throw ShapeError("curve class of the wrong rank");
  if (t.beta.is_zero()) throw OutOfScope("degree-zero extended invariants are not computed");
  if (t.a < 0) return Poly2();
  const int k = mu.size();
  if (k == 0) return Poly2();
  int i = 0;
  int j = 0;
  int d = 0;
  if (!t.beta.as_chain(i, j, d)) return Poly2();
  const int twice_g = t.a - mu.length() - nu.length() + 2;
  if (twice_g % 2 != 0) return Poly2();

  BigRational dots(1);
  for (const auto* p : {&mu, &nu}) {
    for (const auto& [part, label] : p->parts()) {
      dots *= e_dot(label, i, j, w.r);
      if (dots.is_zero()) return Poly2();
    }
  }
  const Partition um = mu.underlying();
  const Partition un = nu.underlying();
  BigRational hsum;
  for (int a1 = 0; a1 <= t.a; ++a1) {
    const int a2 = t.a - a1;
    const BigRational h1 = hurwitz_cache().get_one_part(um, a1);
    if (h1.is_zero()) continue;
    const BigRational h2 = hurwitz_cache().get_one_part(un, a2);
    hsum += h1 * h2 / BigRational(factorial(static_cast<unsigned>(a1)) * factorial(static_cast<unsigned>(a2)));
  }
  if (hsum.is_zero()) return Poly2();
  BigRational c = BigRational(aut_order(um) * aut_order(un)) * dots * hsum;
  c /= BigRational(aut_order_weighted(mu) * aut_order_weighted(nu));
  c *= pow(BigRational(d), long{t.a - 1}) / pow(BigRational(k), long{t.a - 2});
  if ((twice_g / 2) % 2 != 0) c = -c;
  return (Poly2::t1() + Poly2::t2()) * c;
}

RatFunc2 disconnected_two_point(const WeightedPartition& m1, const WeightedPartition& m2, const TwistedDegree& t,
                                const TangentWeights& w) {
  require_divisor_weights(m1);
  require_divisor_weights(m2);
  if (m1.size() != m2.size()) throw ShapeError("2-point invariant of " + m1.str() + " and " + m2.str());
  if (t.beta.is_zero()) throw OutOfScope("degree-zero extended invariants are not computed");
  if (t.a < 0) return RatFunc2();
  int i = 0;
  int j = 0;
  int d = 0;
  if (!t.beta.as_chain(i, j, d)) return RatFunc2();
  const auto left = enumerate_sub_splittings(m1);
  const auto right = enumerate_sub_splittings(m2);
  RatFunc2 sum;
  for (const auto& [th1, nu1] : left) {
    if (nu1.empty()) continue;
    const Partition shape = th1.underlying();
    for (const auto& [th2, nu2] : right) {
      if (nu2.empty() || !(th2.underlying() == shape)) continue;
      Poly2 conn = connected_two_point(nu1, nu2, t, w);
      if (conn.is_zero()) continue;
      RatFunc2 pair = th1.empty() ? RatFunc2(1) : pairing(th1, th2, w);
      if (!pair.is_zero()) sum += pair * RatFunc2(conn);
    }
  }
  return sum;
}

Series two_point_series(const WeightedPartition& m1, const WeightedPartition& m2, const SeriesOrders& orders,
                        const TangentWeights& w) {
  if (orders.r() != w.r) throw ShapeError("series orders have " + std::to_string(orders.r()) + " s-variables, rank is " +
                                          std::to_string(w.r));
  Series out(orders);
  for (int i = 1; i <= w.r; ++i) {
    for (int j = i; j <= w.r; ++j) {
      int dmax = std::numeric_limits<int>::max();
      for (int k = i; k <= j; ++k) dmax = std::min(dmax, orders.s_orders[static_cast<std::size_t>(k - 1)]);
      for (int d = 1; d <= dmax; ++d) {
        const CurveClass beta = CurveClass::chain(w.r, i, j, d);
        SeriesExp e(static_cast<std::size_t>(w.r) + 1, 0);
        for (int k = 1; k <= w.r; ++k) e[static_cast<std::size_t>(k)] = beta.d[static_cast<std::size_t>(k - 1)];
        for (int a = 0; a <= orders.u_order; ++a) {
          e[0] = a;
          RatFunc2 v = disconnected_two_point(m1, m2, TwistedDegree{a, beta}, w);
          if (!v.is_zero()) out.add_to(e, v);
        }
      }
    }
  }
  return out;
}

namespace {

Series table_series(const ZeroDegreeTable::Entry& e, const SeriesOrders& orders) {
  Series s(orders);
  SeriesExp x(static_cast<std::size_t>(orders.r()) + 1, 0);
  for (const auto& [a, c] : e) {
    if (a < 0) throw MalformedInput("table entry with negative u exponent");
    if (a > orders.u_order) continue;
    x[0] = a;
    s.add_to(x, c);
  }
  return s;
}

}  // namespace

DivisorSeries three_point_divisor_series(const WeightedPartition& a1, const DivisorSymbol& d,
                                         const WeightedPartition& a2, const SeriesOrders& orders,
                                         const TangentWeights& w, const ZeroDegreeTable& table) {
  DivisorSeries out{Series(orders), {}};
  switch (d.kind) {
    case DivisorSymbol::Kind::Twisted: {
      SeriesOrders up = orders;
      ++up.u_order;
      out.series = series_d_du(two_point_series(a1, a2, up, w));
      const DivisorSymbol marker = DivisorSymbol::identity();
      if (auto e = table.find(a1, marker, a2)) {
        out.series += series_d_du(table_series(*e, up));
      } else {
        out.gaps.push_back(ZeroDegreeTable::key(a1, marker, a2));
      }
      break;
    }
    case DivisorSymbol::Kind::Untwisted: {
      if (d.index < 1 || d.index > w.r) throw IndexOutOfRange("divisor " + d.str() + " in rank " + std::to_string(w.r));
      out.series = series_s_scale_d(two_point_series(a1, a2, orders, w), d.index);
      if (auto e = table.find(a1, d, a2)) {
        out.series += table_series(*e, orders);
      } else {
        out.gaps.push_back(ZeroDegreeTable::key(a1, d, a2));
      }
      break;
    }
    case DivisorSymbol::Kind::Identity:
      throw MalformedInput("the identity marker is a table key, not a divisor insertion");
  }
  return out;
}

}  // namespace orbsym
