#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbsym/errors.hpp"
#include "orbsym/surface.hpp"

using namespace orbsym;

namespace {
RatFunc2 rf(const char* s) { return RatFunc2::parse(s); }
}  // namespace

TEST_CASE("tangent weights for r = 1") {
  auto w = tangent_weights(1);
  CHECK(RatFunc2(w.L[0]) == rf("2*t1"));
  CHECK(RatFunc2(w.L[1]) == rf("t1 - t2"));
  CHECK(RatFunc2(w.R[0]) == rf("t2 - t1"));
  CHECK(RatFunc2(w.R[1]) == rf("2*t2"));
  CHECK(RatFunc2(tangent_weights(2).L[0]) == rf("3*t1"));
  CHECK_THROWS_AS(tangent_weights(0), MalformedInput);
}

TEST_CASE("tangent weight identities, r = 1..6") {
  const Poly2 theta = Poly2::t1() + Poly2::t2();
  for (int r = 1; r <= 6; ++r) {
    auto w = tangent_weights(r);
    for (int i = 0; i <= r; ++i) CHECK(w.L[i] + w.R[i] == theta);
    for (int i = 0; i < r; ++i) CHECK(w.R[i] == -w.L[i + 1]);
    CHECK(w.L[0] == Poly2(r + 1) * Poly2::t1());
    CHECK(w.R[r] == Poly2(r + 1) * Poly2::t2());
    // L_k R_k = -(r+1)^2 t1^2 modulo t1 + t2
    for (int k = 1; k <= r + 1; ++k) {
      Poly2 diff = w.euler(k) + Poly2(static_cast<long>((r + 1) * (r + 1))) * Poly2::t1() * Poly2::t1();
      CHECK(try_divide(diff, theta).has_value());
    }
  }
}

TEST_CASE("localized Gram matrix is the intersection matrix, r = 1..6") {
  for (int r = 1; r <= 6; ++r) {
    auto w = tangent_weights(r);
    FuncMatrix g = ecurve_gram(w);
    RatMatrix c = intersection_matrix(r);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        REQUIRE(g(i, j).is_constant());
        CHECK(g(i, j).constant_value() == c(i, j));
      }
    }
  }
}

TEST_CASE("omega classes are dual to the exceptional curves") {
  for (int r = 1; r <= 6; ++r) {
    auto w = tangent_weights(r);
    for (int k = 1; k <= r; ++k) {
      for (int j = 1; j <= r; ++j) {
        CHECK(integrate(class_of(ClassLabel::omega(k), w), class_of(ClassLabel::ecurve(j), w), w) ==
              RatFunc2(k == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("integration examples") {
  auto w = tangent_weights(1);
  auto x1 = class_of(ClassLabel::fixed_pt(1), w);
  auto one = class_of(ClassLabel::one(), w);
  CHECK(integrate(x1, x1, w) == RatFunc2(w.euler(1)));
  CHECK(integrate(one, one, w) == rf("1/(2*t1*t2)"));
  CHECK(integrate(x1, one, w) == RatFunc2(1));
  CHECK(integrate(class_of(ClassLabel::ecurve(1), w), w).is_zero());
  auto w3 = tangent_weights(3);
  CHECK(integrate(class_of(ClassLabel::ecurve(2), w3), class_of(ClassLabel::ecurve(3), w3), w3) == RatFunc2(1));
  CHECK(integrate(class_of(ClassLabel::ecurve(1), w3), class_of(ClassLabel::ecurve(3), w3), w3).is_zero());
  CHECK_THROWS_AS(class_of(ClassLabel::ecurve(2), w), IndexOutOfRange);
  CHECK_THROWS_AS(class_of(ClassLabel::fixed_pt(3), w), IndexOutOfRange);
}

TEST_CASE("curve classes") {
  CHECK(curve_exponents(CurveClass::chain(4, 2, 3, 5)) == std::vector<int>{0, 5, 5, 0});
  CHECK(curve_exponents(CurveClass{{0, 1, 0}}) == std::vector<int>{0, 1, 0});
  CHECK(CurveClass{{0, 0}}.is_zero());
  int i = 0, j = 0, d = 0;
  CHECK(CurveClass::chain(3, 1, 2, 2).as_chain(i, j, d));
  CHECK((i == 1 && j == 2 && d == 2));
  CHECK_FALSE(CurveClass{{1, 0, 1}}.as_chain(i, j, d));
  CHECK_FALSE(CurveClass{{1, 2}}.as_chain(i, j, d));
}

TEST_CASE("E_ij dot products") {
  CHECK(e_dot(ClassLabel::ecurve(1), 1, 1, 1) == BigRational(-2));
  CHECK(e_dot(ClassLabel::ecurve(1), 1, 2, 2) == BigRational(-1));
  CHECK(e_dot(ClassLabel::one(), 1, 2, 3) == BigRational(0));
  CHECK(e_dot(ClassLabel::omega(2), 1, 2, 3) == BigRational(1));
  CHECK(e_dot(ClassLabel::omega(3), 1, 2, 3) == BigRational(0));
  CHECK_THROWS_AS(e_dot(ClassLabel::fixed_pt(1), 1, 1, 1), UnsupportedWeight);
  // agrees with localization
  for (int r = 1; r <= 4; ++r) {
    auto w = tangent_weights(r);
    for (int i = 1; i <= r; ++i) {
      for (int j = i; j <= r; ++j) {
        SurfaceClass eij = SurfaceClass::zero(r + 1);
        for (int l = i; l <= j; ++l) eij += class_of(ClassLabel::ecurve(l), w);
        for (const auto& g : {ClassLabel::ecurve(1), ClassLabel::ecurve(r), ClassLabel::omega(1), ClassLabel::omega(r)}) {
          CHECK(RatFunc2(e_dot(g, i, j, r)) == integrate(eij, class_of(g, w), w));
        }
      }
    }
  }
}
