#include "orbsym/operators.hpp"

#include <sstream>

#include "orbsym/algebra/char_poly.hpp"
#include "orbsym/chenruan.hpp"
#include "orbsym/errors.hpp"

namespace orbsym {

OperatorMatrix divisor_operator(int n, int r, const DivisorSymbol& d, const std::vector<WeightedPartition>& basis,
                                const SeriesOrders& orders, const TangentWeights& w, const ZeroDegreeTable& table) {
  if (w.r != r) throw ShapeError("tangent weights of rank " + std::to_string(w.r) + " for an operator in rank " + std::to_string(r));
  for (const auto& b : basis) {
    if (b.size() != n) throw ShapeError("basis element " + b.str() + " is not of size " + std::to_string(n));
  }
  if (d.kind == DivisorSymbol::Kind::Identity) throw MalformedInput("the identity marker is not a divisor");
  const auto m = static_cast<int>(basis.size());
  const DualBasis dual = dual_basis(basis, w);

  // t[γ][j] = ⟨⟨basis[γ], D, basis[j]⟩⟩
  std::vector<std::vector<DivisorSeries>> t(static_cast<std::size_t>(m));
  for (int g = 0; g < m; ++g) {
    for (int j = 0; j < m; ++j) {
      t[static_cast<std::size_t>(g)].push_back(
          three_point_divisor_series(basis[static_cast<std::size_t>(g)], d, basis[static_cast<std::size_t>(j)], orders, w, table));
    }
  }
  OperatorMatrix out{basis, d, orders, {}, {}};
  out.entries.assign(static_cast<std::size_t>(m), std::vector<Series>(static_cast<std::size_t>(m), Series(orders)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Series acc(orders);
      for (int g = 0; g < m; ++g) {
        const RatFunc2& c = dual.coeffs(i, g);
        if (c.is_zero()) continue;
        const DivisorSeries& x = t[static_cast<std::size_t>(g)][static_cast<std::size_t>(j)];
        if (!x.gaps.empty()) out.gaps.emplace(i, j);
        acc += x.series * c;
      }
      out.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(acc);
    }
  }
  return out;
}

std::vector<WeightedPartition> basis_a1n2() {
  std::vector<WeightedPartition> b;
  for (const char* s : {"1(E1)+1(E1)", "2(E1)", "1(1)+1(E1)", "2(1)", "1(1)+1(1)"}) b.push_back(WeightedPartition::parse(s));
  return b;
}

QMatrix closed_form_a1n2() {
  const QExpr th = QExpr::t1() + QExpr::t2();
  const QExpr s = QExpr::s(1);
  const QExpr q = QExpr::q();
  const QExpr i = QExpr::i();
  const QExpr a = QExpr(1) / (QExpr(1) + s * q);
  const QExpr b = QExpr(1) / (QExpr(1) + s / q);
  const QExpr tt = QExpr::t1() * QExpr::t2();
  const QExpr zero(0);
  return {
      {QExpr(2) * th * (QExpr(1) - a - b), i * th * (a - b), QExpr(-1), zero, zero},
      {-(QExpr(2) * i * th * (a - b)), th * (QExpr(2) - a - b - QExpr(2) / (QExpr(1) - s)), zero, QExpr(-1), zero},
      {QExpr(2) * tt, zero, -(th * (QExpr(1) + s)) / (QExpr(1) - s), zero, -(QExpr(1) / QExpr(2))},
      {zero, QExpr(4) * tt, zero, zero, zero},
      {zero, zero, QExpr(4) * tt, zero, zero},
  };
}

ZeroDegreeTable zero_degree_table_a1n2(int u_order) {
  const auto basis = basis_a1n2();
  const auto w = tangent_weights(1);
  const QMatrix pm = closed_form_a1n2();
  const SeriesOrders o{u_order, {0}};
  const auto m = basis.size();
  std::vector<std::vector<Series>> m0(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) m0[i].push_back(expand_q_closed_form(pm[i][j], o));
  }
  const PairingMatrix g = gram_matrix(basis, w);
  const DivisorSymbol d = DivisorSymbol::untwisted(1);
  ZeroDegreeTable table;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t j = 0; j < m; ++j) {
      Series t0(o);
      for (std::size_t i = 0; i < m; ++i) {
        const RatFunc2& c = g.gram(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(i));
        if (!c.is_zero()) t0 += m0[i][j] * c;
      }
      ZeroDegreeTable::Entry e;
      for (const auto& [x, c] : t0.terms()) e.emplace_back(x[0], c);
      table.set(basis[a], d, basis[j], std::move(e));
    }
  }
  return table;
}

std::string EntryDiff::str() const {
  return "entry (" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ") at " + exp_str(exp) + ": expected " +
         expected.str() + ", computed " + computed.str();
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  os << matched << "/" << entries << " entries match";
  os << " (u order " << orders.u_order << ", s order";
  for (int d : orders.s_orders) os << " " << d;
  os << "), " << coefficients << " coefficients compared, " << curve_coefficients << " in nonzero degree";
  if (!gaps.empty()) os << "; " << gaps.size() << " entries lack degree-zero data";
  return os.str();
}

VerifyReport verify_a1n2(const SeriesOrders& orders) { return verify_a1n2(orders, zero_degree_table_a1n2(orders.u_order)); }

VerifyReport verify_a1n2(const SeriesOrders& orders, const ZeroDegreeTable& table) {
  if (orders.r() != 1) throw ShapeError("the Sym^2(A_1) check needs exactly one s order");
  const auto basis = basis_a1n2();
  const auto w = tangent_weights(1);
  const QMatrix pm = closed_form_a1n2();
  const OperatorMatrix op = divisor_operator(2, 1, DivisorSymbol::untwisted(1), basis, orders, w, table);
  VerifyReport rep{orders, 0, 0, 0, 0, {}, op.gaps};
  const int m = static_cast<int>(basis.size());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      ++rep.entries;
      const Series expected = expand_q_closed_form(pm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], orders);
      const Series& computed = op.at(i, j);
      const bool full = !op.gaps.contains({i, j});
      std::set<SeriesExp> exps;
      for (const auto& [e, c] : expected.terms()) exps.insert(e);
      for (const auto& [e, c] : computed.terms()) exps.insert(e);
      bool same = true;
      for (const auto& e : exps) {
        if (e[1] == 0 && !full) continue;
        ++rep.coefficients;
        if (e[1] > 0) ++rep.curve_coefficients;
        RatFunc2 x = expected.coeff(e);
        RatFunc2 y = computed.coeff(e);
        if (!(x == y)) {
          rep.mismatches.push_back({i, j, e, x, y});
          same = false;
        }
      }
      if (same && full) ++rep.matched;
    }
  }
  return rep;
}

int grading(const WeightedPartition& lambda, int n) {
  int g = age(lambda.underlying(), n);
  for (const auto& [part, label] : lambda.parts()) g += label.degree();
  return g;
}

NakajimaSymbol l_map(const WeightedPartition& lambda, int n) {
  const int a = age(lambda.underlying(), n);
  return {lambda, ((-a) % 4 + 4) % 4, grading(lambda, n)};
}

int nakajima_pairing_sign(const WeightedPartition& lambda, int n) { return age(lambda.underlying(), n) % 2 == 0 ? 1 : -1; }

std::string NakajimaSymbol::str() const {
  static const char* const kUnit[] = {"1", "i", "-1", "-i"};
  std::string out = std::string(kUnit[i_power]) + "*a[";
  for (std::size_t k = 0; k < lambda.parts().size(); ++k) {
    if (k) out += ",";
    out += std::to_string(lambda.parts()[k].first) + "(" + lambda.parts()[k].second.str() + ")";
  }
  return out + "]";
}

EigenReport eigen_certify(const RatMatrix& m) {
  auto [p, sf] = char_poly_squarefree(m);
  return {p, sf, false};
}

EigenReport eigen_certify(const QMatrix& m, const QPoint& at) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Mat<GaussRational> v(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(m[static_cast<std::size_t>(i)].size()) != n) throw ShapeError("closed-form matrix is not square");
    for (Eigen::Index j = 0; j < n; ++j) v(i, j) = evaluate(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], at);
  }
  auto [p, sf] = char_poly_squarefree(v);
  return {p, sf, false};
}

EigenReport eigen_certify(const OperatorMatrix& m, const BigRational& t1, const BigRational& t2,
                          const std::vector<BigRational>& s, const BigRational& u) {
  if (!m.gaps.empty()) throw ShapeError("operator matrix has " + std::to_string(m.gaps.size()) + " entries with missing degree-zero data");
  if (static_cast<int>(s.size()) != m.orders.r()) throw ShapeError("wrong number of s values");
  const auto n = static_cast<Eigen::Index>(m.size());
  RatMatrix v = RatMatrix::Constant(n, n, BigRational(0));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      BigRational acc;
      for (const auto& [e, c] : m.at(static_cast<int>(i), static_cast<int>(j)).terms()) {
        BigRational x = c.evaluate(t1, t2) * pow(u, long{e[0]});
        for (std::size_t k = 0; k < s.size(); ++k) x *= pow(s[k], long{e[k + 1]});
        acc += x;
      }
      v(i, j) = acc;
    }
  }
  auto [p, sf] = char_poly_squarefree(v);
  return {p, sf, true};
}

}  // namespace orbsym
