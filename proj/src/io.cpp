#include "orbsym/io.hpp"

#include <sstream>

#include <json.hpp>

#include "orbsym/errors.hpp"

namespace orbsym {

namespace {

using json = nlohmann::ordered_json;

json orders_json(const SeriesOrders& o) { return json{{"u", o.u_order}, {"s", o.s_orders}}; }

SeriesOrders orders_from(const json& j) {
  if (!j.is_object() || !j.contains("u") || !j.contains("s")) throw MalformedInput("series orders need \"u\" and \"s\"");
  return SeriesOrders{j.at("u").get<int>(), j.at("s").get<std::vector<int>>()};
}

json series_json(const Series& s) {
  json terms = json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back(json::array({e, c.str()}));
  return json{{"orders", orders_json(s.orders())}, {"terms", terms}};
}

Series series_from(const json& j) {
  if (!j.is_object() || !j.contains("terms")) throw MalformedInput("series JSON needs \"orders\" and \"terms\"");
  Series s(orders_from(j.at("orders")));
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 2) throw MalformedInput("series term must be [exponents, value]");
    SeriesExp e = t[0].get<SeriesExp>();
    if (!s.in_range(e)) throw MalformedInput("series term " + exp_str(e) + " lies outside the stated orders");
    s.add_to(e, RatFunc2::parse(t[1].get<std::string>()));
  }
  return s;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

std::string rational_latex(const BigRational& q) {
  if (q.is_integer()) return q.str();
  std::string sign = q.sign() < 0 ? "-" : "";
  BigInt n = q.num();
  if (n < 0) n = -n;
  return sign + "\\frac{" + n.get_str() + "}{" + q.den().get_str() + "}";
}

std::string poly_latex(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, coeff] : p.terms()) {
    BigRational c = coeff;
    const bool neg = c.sign() < 0;
    if (neg) c = -c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    const bool constant = e.first == 0 && e.second == 0;
    if (!c.is_one() || constant) out += rational_latex(c);
    if (e.first > 0) out += e.first > 1 ? "t_1^{" + std::to_string(e.first) + "}" : "t_1";
    if (e.second > 0) out += e.second > 1 ? "t_2^{" + std::to_string(e.second) + "}" : "t_2";
  }
  return out;
}

std::string monomial_latex(const SeriesExp& e) {
  std::string out;
  if (e[0] > 0) out += e[0] > 1 ? "u^{" + std::to_string(e[0]) + "}" : "u";
  for (std::size_t k = 1; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += " ";
    out += "s_{" + std::to_string(k) + "}";
    if (e[k] > 1) out += "^{" + std::to_string(e[k]) + "}";
  }
  return out;
}

std::string series_latex(const Series& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    if (!first) out += " + ";
    first = false;
    std::string coef = ratfunc_latex(c);
    const std::string mono = monomial_latex(e);
    if (!mono.empty() && c.num().terms().size() > 1 && c.den().is_constant()) coef = "\\left(" + coef + "\\right)";
    out += coef + (mono.empty() ? "" : " " + mono);
  }
  return out;
}

}  // namespace

std::string ratfunc_latex(const RatFunc2& f) {
  if (f.den().is_constant()) {
    // den is normalized to 1
    return poly_latex(f.num());
  }
  // clear coefficient denominators so 1/2/(t1 t2) prints as 1/(2 t1 t2)
  BigInt l = 1;
  for (const Poly2* p : {&f.num(), &f.den()}) {
    for (const auto& [e, c] : p->terms()) l = lcm(l, c.den());
  }
  const BigRational scale(l);
  return "\\frac{" + poly_latex(f.num() * scale) + "}{" + poly_latex(f.den() * scale) + "}";
}

std::string series_to_json(const Series& s) { return series_json(s).dump(); }

Series series_from_json(std::string_view text) { return series_from(parse_json(text)); }

std::string operator_to_json(const OperatorMatrix& m) {
  json basis = json::array();
  for (const auto& b : m.basis) basis.push_back(b.str());
  json entries = json::array();
  for (const auto& row : m.entries) {
    json r = json::array();
    for (const auto& s : row) r.push_back(series_json(s));
    entries.push_back(r);
  }
  json gaps = json::array();
  for (const auto& [i, j] : m.gaps) gaps.push_back(json::array({i, j}));
  json out{{"basis", basis}, {"divisor", m.divisor.str()}, {"orders", orders_json(m.orders)}, {"entries", entries}, {"gaps", gaps}};
  return out.dump(2);
}

OperatorMatrix operator_from_json(std::string_view text) {
  const json j = parse_json(text);
  for (const char* k : {"basis", "divisor", "orders", "entries", "gaps"}) {
    if (!j.contains(k)) throw MalformedInput(std::string("operator JSON lacks \"") + k + "\"");
  }
  OperatorMatrix m;
  for (const auto& b : j.at("basis")) m.basis.push_back(WeightedPartition::parse(b.get<std::string>()));
  m.divisor = DivisorSymbol::parse(j.at("divisor").get<std::string>());
  m.orders = orders_from(j.at("orders"));
  for (const auto& row : j.at("entries")) {
    std::vector<Series> r;
    for (const auto& s : row) r.push_back(series_from(s));
    if (r.size() != m.basis.size()) throw MalformedInput("operator row length does not match the basis");
    m.entries.push_back(std::move(r));
  }
  if (m.entries.size() != m.basis.size()) throw MalformedInput("operator row count does not match the basis");
  for (const auto& g : j.at("gaps")) m.gaps.emplace(g.at(0).get<int>(), g.at(1).get<int>());
  return m;
}

std::string operator_to_csv(const OperatorMatrix& m) {
  std::ostringstream os;
  os << "row,col,a";
  for (int k = 1; k <= m.orders.r(); ++k) os << ",d" << k;
  os << ",value\n";
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      for (const auto& [e, c] : m.at(i, j).terms()) {
        os << i + 1 << "," << j + 1;
        for (int x : e) os << "," << x;
        os << ",\"" << c.str() << "\"\n";
      }
    }
  }
  return os.str();
}

std::string operator_to_latex(const OperatorMatrix& m) {
  std::ostringstream os;
  os << "% " << m.divisor.str() << " in the basis";
  for (const auto& b : m.basis) os << " " << b.str();
  os << "\n\\left(\\begin{matrix}\n";
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      os << (j ? " & " : "") << series_latex(m.at(i, j));
      if (m.gaps.contains({i, j})) os << " + ?";
    }
    os << (i + 1 < m.size() ? "\\\\\n" : "\n");
  }
  os << "\\end{matrix}\\right)\n";
  return os.str();
}

std::string qmatrix_to_latex(const QMatrix& m) {
  std::ostringstream os;
  os << "\\left(\\begin{matrix}\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? " & " : "") << m[i][j].latex();
    os << (i + 1 < m.size() ? "\\\\\n" : "\n");
  }
  os << "\\end{matrix}\\right)\n";
  return os.str();
}

}  // namespace orbsym
