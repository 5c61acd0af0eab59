#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orbsym/algebra/char_poly.hpp"
#include "orbsym/algebra/linalg.hpp"
#include "orbsym/algebra/qexpr.hpp"
#include "orbsym/algebra/trunc_series.hpp"

using namespace orbsym;

namespace {

RatFunc2 rf(const char* s) { return RatFunc2::parse(s); }

SeriesOrders ord(int a, std::vector<int> d) { return SeriesOrders{a, std::move(d)}; }

Series mono(const SeriesOrders& o, SeriesExp e, RatFunc2 c = RatFunc2(1)) { return Series::monomial(o, e, c); }

Poly2 random_poly2(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 2), coef(-3, 3);
  Poly2 p;
  for (int k = 0; k < 3; ++k) p += Poly2::monomial(BigRational(coef(rng)), deg(rng), deg(rng));
  return p;
}

RatFunc2 random_ratfunc(std::mt19937& rng) {
  Poly2 d;
  while (d.is_zero()) d = random_poly2(rng);
  return RatFunc2(random_poly2(rng), d);
}

Series random_series(std::mt19937& rng, const SeriesOrders& o) {
  std::uniform_int_distribution<int> a(0, o.u_order), d(0, o.s_orders[0]), c(-4, 4);
  Series s(o);
  for (int k = 0; k < 5; ++k) s.add_to({a(rng), d(rng)}, RatFunc2(c(rng)) * RatFunc2::t1() + RatFunc2(c(rng)));
  return s;
}

}  // namespace

TEST_CASE("big rationals stay in lowest terms") {
  BigRational q(6, -4);
  CHECK(q.str() == "-3/2");
  CHECK(q.den() > 0);
  CHECK(BigRational::parse("10/4") == BigRational(5, 2));
  CHECK_THROWS_AS(BigRational(1, 0), MalformedInput);
  CHECK(factorial(5) == 120);
}

TEST_CASE("gaussian rationals") {
  GaussRational i = GaussRational::i();
  CHECK(i * i == GaussRational(-1));
  GaussRational z(BigRational(3), BigRational(-2));
  CHECK(z.conj().conj() == z);
  CHECK(z / z == GaussRational(1));
  CHECK((z * z.conj()).is_real());
}

TEST_CASE("ratfunc normalization") {
  CHECK(rf("(t1^2 - t2^2)/(t1 + t2)") == rf("t1 - t2"));
  CHECK(rf("(t1^2 - t2^2)/(t1 + t2)").den() == Poly2(1));
  RatFunc2 z(Poly2(), Poly2::t1());
  CHECK(z.is_zero());
  CHECK(z.den() == Poly2(1));
  RatFunc2 f(Poly2(2) * Poly2::t1(), Poly2(-2) * Poly2::t2());
  CHECK(f.num() == -Poly2::t1());
  CHECK(f.den() == Poly2::t2());
  CHECK(f.den().leading_coeff() == BigRational(1));
  CHECK(ratfunc_normalize(f.num(), f.den()) == f);
  CHECK_THROWS_AS(RatFunc2(Poly2(1), Poly2()), MalformedInput);
  CHECK(rf("1/(2*t1*(t2-t1)) + 1/((t1-t2)*2*t2)") == rf("1/(2*t1*t2)"));
  CHECK(rf("(t1+t2)^-2 * (t1+t2)^3") == rf("t1+t2"));
}

TEST_CASE("ratfunc gcd finds non-obvious common factors") {
  Poly2 a = Poly2::t1() * Poly2::t2() + Poly2(1);
  Poly2 b = Poly2::t1() - Poly2::t2() * Poly2::t2();
  Poly2 c = Poly2::t1() + Poly2(3) * Poly2::t2();
  RatFunc2 f(a * b * c, b * c * c);
  CHECK(f == RatFunc2(a, c));
}

TEST_CASE("ratfunc ring axioms on random triples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    RatFunc2 a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("ratfunc evaluation") {
  CHECK(rf("(t1+1)/(t2-2)").evaluate(BigRational(1), BigRational(3)) == BigRational(2));
  CHECK_THROWS_AS(rf("1/(t2-2)").evaluate(BigRational(1), BigRational(2)), EvaluationError);
  CHECK(rf("(2*t1 - t2)/(t1*t2)").str() == "(2*t1 - t2)/(t1*t2)");
}

TEST_CASE("series arithmetic") {
  auto o = ord(2, {0});
  Series one = Series::constant(o, RatFunc2(1));
  Series u = mono(o, {1, 0});
  CHECK((one + u) * (one - u) == one - u * u);
  CHECK((u * u).coeff({2, 0}) == RatFunc2(1));

  auto os = ord(0, {5});
  Series geo(os);
  for (int d = 0; d <= 5; ++d) geo.add_to({0, d}, RatFunc2(1));
  CHECK(geo * (Series::constant(os, RatFunc2(1)) - mono(os, {0, 1})) == Series::constant(os, RatFunc2(1)));
  CHECK(geo == (Series::constant(os, RatFunc2(1)) - mono(os, {0, 1})).inverse());

  auto o1 = ord(1, {0});
  Series u1 = mono(o1, {1, 0});
  CHECK((u1 * u1).is_zero());
  CHECK_THROWS_AS(series_arith(u1, u, SeriesOp::Add), ShapeError);
  CHECK(series_arith(u, u, SeriesOp::Sub).is_zero());
}

TEST_CASE("truncated product equals truncation of full product") {
  std::mt19937 rng(11);
  auto big = ord(6, {6});
  auto small = ord(3, {2});
  for (int trial = 0; trial < 20; ++trial) {
    Series a = random_series(rng, big), b = random_series(rng, big);
    CHECK((a * b).truncated(small) == a.truncated(small) * b.truncated(small));
  }
}

TEST_CASE("series ring axioms") {
  std::mt19937 rng(3);
  auto o = ord(4, {3});
  for (int trial = 0; trial < 15; ++trial) {
    Series a = random_series(rng, o), b = random_series(rng, o), c = random_series(rng, o);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("d/du") {
  auto o = ord(2, {0});
  CHECK(series_d_du(mono(o, {2, 0}, RatFunc2(3))) == mono(ord(1, {0}), {1, 0}, RatFunc2(6)));
  CHECK(series_d_du(Series::constant(o, RatFunc2(5))).is_zero());
  CHECK_THROWS_AS(series_d_du(Series::constant(ord(0, {0}), RatFunc2(1))), EmptyOrder);

  Series e4(ord(4, {0}));
  for (int a = 0; a <= 4; ++a) e4.add_to({a, 0}, BigRational(BigInt(1), factorial(static_cast<unsigned>(a))));
  Series e3 = series_d_du(e4);
  CHECK(e3.orders().u_order == 3);
  CHECK(e3 == e4.truncated(ord(3, {0})));
}

TEST_CASE("s d/ds") {
  auto o = ord(0, {4, 2});
  CHECK(series_s_scale_d(mono(o, {0, 3, 0}), 1) == mono(o, {0, 3, 0}, RatFunc2(3)));
  CHECK(series_s_scale_d(mono(o, {0, 0, 1}), 1).is_zero());
  Series h(o), g(o);
  for (int d = 1; d <= 4; ++d) {
    h.add_to({0, d, 0}, BigRational(1, d));
    g.add_to({0, d, 0}, RatFunc2(1));
  }
  CHECK(series_s_scale_d(h, 1) == g);
  CHECK_THROWS_AS(series_s_scale_d(h, 3), IndexOutOfRange);
  CHECK_THROWS_AS(series_s_scale_d(h, 0), IndexOutOfRange);
}

TEST_CASE("partial derivatives commute") {
  std::mt19937 rng(5);
  auto o = ord(4, {4});
  for (int trial = 0; trial < 10; ++trial) {
    Series f = random_series(rng, o);
    CHECK(series_d_du(series_s_scale_d(f, 1)) == series_s_scale_d(series_d_du(f), 1));
  }
}

TEST_CASE("q expansion: single geometric factor carries i") {
  auto o = ord(1, {1});
  QExpr s = QExpr::s(1), q = QExpr::q();
  GaussSeries g = expand_q_gauss(QExpr(1) / (QExpr(1) + s * q), o);
  // -s q = s e^{iu}: coefficient of s u is i.
  CHECK(g.coeff({1, 1}) == GaussRatFunc(RatFunc2(0), RatFunc2(1)));
  CHECK_THROWS_AS(expand_q_closed_form(QExpr(1) / (QExpr(1) + s * q), o), RealnessViolation);
}

TEST_CASE("q expansion: sine combination") {
  auto o = ord(3, {3});
  QExpr s = QExpr::s(1), q = QExpr::q(), th = QExpr::t1() + QExpr::t2();
  QExpr e = QExpr::i() * th * (QExpr(1) / (QExpr(1) + s * q) - QExpr(1) / (QExpr(1) + s / q));
  Series x = expand_q_closed_form(e, o);
  // i theta (e^{idu} - e^{-idu}) per s^d = -2 theta sin(du)
  for (int d = 1; d <= 3; ++d) {
    CHECK(x.coeff({1, d}) == RatFunc2(-2 * d) * rf("t1+t2"));
    CHECK(x.coeff({3, d}) == RatFunc2(BigRational(2L * d * d * d, 6)) * rf("t1+t2"));
    CHECK(x.coeff({0, d}).is_zero());
    CHECK(x.coeff({2, d}).is_zero());
  }
}

TEST_CASE("q expansion: cosine combination") {
  auto o = ord(2, {4});
  QExpr s = QExpr::s(1), q = QExpr::q();
  Series x = expand_q_closed_form(QExpr(1) / (QExpr(1) + s * q) + QExpr(1) / (QExpr(1) + s / q), o);
  for (int d = 1; d <= 4; ++d) {
    CHECK(x.coeff({0, d}) == RatFunc2(2));
    CHECK(x.coeff({2, d}) == RatFunc2(-d * d));
  }
  CHECK(x.coeff({0, 0}) == RatFunc2(2));
}

TEST_CASE("q expansion without q matches direct series") {
  auto o = ord(2, {5});
  QExpr s = QExpr::s(1);
  Series x = expand_q_closed_form(QExpr(2) / (QExpr(1) - s), o);
  for (int d = 0; d <= 5; ++d) {
    CHECK(x.coeff({0, d}) == RatFunc2(2));
    CHECK(x.coeff({1, d}).is_zero());
  }
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> c(1, 5);
  for (int trial = 0; trial < 10; ++trial) {
    long a = c(rng), b = c(rng), k = c(rng);
    QExpr e = QExpr(a) * QExpr::t1() / (QExpr(b) - QExpr(k) * s) + pow(s, 2) * QExpr::t2();
    Series direct = Series::constant(o, RatFunc2(b)) - mono(o, {0, 1}, RatFunc2(k));
    direct = mono(o, {0, 0}, RatFunc2(a) * RatFunc2::t1()) * direct.inverse() + mono(o, {0, 2}, RatFunc2::t2());
    CHECK(expand_q_closed_form(e, o) == direct);
  }
}

TEST_CASE("q expansion pole at origin") {
  auto o = ord(1, {1});
  CHECK_THROWS_AS(expand_q_closed_form(QExpr(1) / QExpr::s(1), o), PoleAtOrigin);
  CHECK_THROWS_AS(expand_q_closed_form(QExpr(1) / (QExpr(1) + QExpr::q()), o), PoleAtOrigin);
  CHECK_NOTHROW(expand_q_gauss(QExpr(1) / (QExpr(1) - QExpr::q()), o));
}

TEST_CASE("q expression evaluation") {
  QPoint p{BigRational(1), BigRational(2), {BigRational(1, 3)}, GaussRational(BigRational(1, 5))};
  QExpr e = (QExpr::t1() + QExpr::t2()) * QExpr(2) / (QExpr(1) - QExpr::s(1));
  CHECK(evaluate(e, p) == GaussRational(9));
  p.s[0] = BigRational(1);
  CHECK_THROWS_AS(evaluate(e, p), EvaluationError);
  CHECK(e.str() == "(t1 + t2)*2/(1 - s1)");
}

TEST_CASE("exact linear solve") {
  RatMatrix a(2, 2);
  a << BigRational(2), BigRational(1), BigRational(1), BigRational(3);
  RatMatrix inv = inverse_exact(a);
  RatMatrix id = multiply(a, inv);
  CHECK(id(0, 0) == BigRational(1));
  CHECK(id(0, 1) == BigRational(0));
  CHECK(inv(0, 0) == BigRational(3, 5));
  RatMatrix sing(2, 2);
  sing << BigRational(1), BigRational(2), BigRational(2), BigRational(4);
  CHECK_THROWS_AS(inverse_exact(sing), DegenerateBasis);

  FuncMatrix f(2, 2);
  f << rf("t1"), rf("1"), rf("0"), rf("t2");
  FuncMatrix fi = inverse_exact(f);
  CHECK(fi(0, 1) == rf("-1/(t1*t2)"));
}

TEST_CASE("characteristic polynomials") {
  RatMatrix id = RatMatrix::Constant(5, 5, BigRational(0));
  for (int k = 0; k < 5; ++k) id(k, k) = BigRational(1);
  auto [p_id, sf_id] = char_poly_squarefree(id);
  Poly1 xm1 = Poly1::x() - Poly1(1);
  CHECK(p_id == xm1 * xm1 * xm1 * xm1 * xm1);
  CHECK_FALSE(sf_id);

  RatMatrix dg = RatMatrix::Constant(5, 5, BigRational(0));
  Poly1 expect(1);
  for (int k = 0; k < 5; ++k) {
    dg(k, k) = BigRational(k + 1);
    expect *= Poly1::x() - Poly1(k + 1);
  }
  auto [p_dg, sf_dg] = char_poly_squarefree(dg);
  CHECK(p_dg == expect);
  CHECK(sf_dg);

  RatMatrix comp(2, 2);
  comp << BigRational(0), BigRational(2), BigRational(1), BigRational(0);
  auto [p_c, sf_c] = char_poly_squarefree(comp);
  CHECK(p_c == Poly1::x() * Poly1::x() - Poly1(2));
  CHECK(sf_c);

  CHECK_THROWS_AS(char_poly(RatMatrix(2, 3)), ShapeError);
}

TEST_CASE("char poly agrees with a cofactor determinant on random matrices") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = BigRational(c(rng));
    Poly1 p = char_poly(m);
    BigRational x(c(rng));
    RatMatrix xm = -m;
    for (int k = 0; k < 3; ++k) xm(k, k) += x;
    BigRational det = xm(0, 0) * (xm(1, 1) * xm(2, 2) - xm(1, 2) * xm(2, 1)) -
                      xm(0, 1) * (xm(1, 0) * xm(2, 2) - xm(1, 2) * xm(2, 0)) +
                      xm(0, 2) * (xm(1, 0) * xm(2, 1) - xm(1, 1) * xm(2, 0));
    CHECK(p.evaluate(x) == det);
  }
}

TEST_CASE("block duplication gives a repeated eigenvalue") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    RatMatrix b(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) b(i, j) = BigRational(c(rng));
    RatMatrix m = RatMatrix::Constant(4, 4, BigRational(0));
    m.block(0, 0, 2, 2) = b;
    m.block(2, 2, 2, 2) = b;
    CHECK_FALSE(char_poly_squarefree(m).second);
  }
}

TEST_CASE("gaussian char poly must be real") {
  Mat<GaussRational> m(2, 2);
  m << GaussRational(0), GaussRational::i(), GaussRational::i(), GaussRational(0);
  CHECK(char_poly(m) == Poly1::x() * Poly1::x() + Poly1(1));
  m(0, 0) = GaussRational::i();
  CHECK_THROWS_AS(char_poly(m), RealnessViolation);
}
