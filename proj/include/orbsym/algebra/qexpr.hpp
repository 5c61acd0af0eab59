#pragma once

#include <memory>
#include <string>
#include <vector>

#include "orbsym/algebra/gauss.hpp"
#include "orbsym/algebra/ratfunc2.hpp"
#include "orbsym/algebra/trunc_series.hpp"

namespace orbsym {

using GaussRatFunc = Gauss<RatFunc2>;
using GaussSeries = TruncSeries<GaussRatFunc>;

// Closed-form expression in q, s_1..s_r, t1, t2 with Gaussian-rational
// constants. Immutable; subtrees are shared.
class QExpr {
 public:
  enum class Kind { Const, Q, S, T1, T2, Add, Sub, Mul, Div, Neg, Pow };

  QExpr() : QExpr(constant(GaussRational(0))) {}
  QExpr(long c) : QExpr(constant(GaussRational(c))) {}  // NOLINT(google-explicit-constructor)

  static QExpr constant(const GaussRational& c);
  static QExpr i() { return constant(GaussRational::i()); }
  static QExpr q();
  static QExpr s(int k);
  static QExpr t1();
  static QExpr t2();

  Kind kind() const { return node_->kind; }
  const GaussRational& value() const { return node_->value; }
  // s index for Kind::S, exponent for Kind::Pow.
  int index() const { return node_->index; }
  const QExpr& lhs() const { return node_->args.at(0); }
  const QExpr& rhs() const { return node_->args.at(1); }

  std::string str() const;
  std::string latex() const;

  friend QExpr operator+(const QExpr& a, const QExpr& b) { return binary(Kind::Add, a, b); }
  friend QExpr operator-(const QExpr& a, const QExpr& b) { return binary(Kind::Sub, a, b); }
  friend QExpr operator*(const QExpr& a, const QExpr& b) { return binary(Kind::Mul, a, b); }
  friend QExpr operator/(const QExpr& a, const QExpr& b) { return binary(Kind::Div, a, b); }
  friend QExpr operator-(const QExpr& a);
  friend QExpr pow(const QExpr& base, int exponent);

 private:
  struct Node {
    Kind kind = Kind::Const;
    GaussRational value;
    int index = 0;
    std::vector<QExpr> args;
  };
  explicit QExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static QExpr binary(Kind k, const QExpr& a, const QExpr& b);

  std::shared_ptr<const Node> node_;
};

// Rational specialization point for evaluate(); q may be Gaussian.
struct QPoint {
  BigRational t1;
  BigRational t2;
  std::vector<BigRational> s;
  GaussRational q;
};

// Substitutes q = -exp(i u) (expanded to u^A), expands around u = s = 0 and
// keeps Gaussian coefficients. Throws PoleAtOrigin on a non-invertible
// denominator.
GaussSeries expand_q_gauss(const QExpr& e, const SeriesOrders& orders);

// As expand_q_gauss, then requires every coefficient to be real.
// Throws RealnessViolation naming the first offending monomial.
Series expand_q_closed_form(const QExpr& e, const SeriesOrders& orders);

// Exact value at a point; throws EvaluationError at a pole.
GaussRational evaluate(const QExpr& e, const QPoint& at);

}  // namespace orbsym
