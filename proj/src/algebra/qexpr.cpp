#include "orbsym/algebra/qexpr.hpp"

#include <sstream>

#include "orbsym/errors.hpp"

namespace orbsym {

QExpr QExpr::constant(const GaussRational& c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = c;
  return QExpr(std::move(n));
}

QExpr QExpr::q() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Q;
  return QExpr(std::move(n));
}

QExpr QExpr::s(int k) {
  if (k < 1) throw IndexOutOfRange("s index must be positive, got " + std::to_string(k));
  auto n = std::make_shared<Node>();
  n->kind = Kind::S;
  n->index = k;
  return QExpr(std::move(n));
}

QExpr QExpr::t1() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::T1;
  return QExpr(std::move(n));
}

QExpr QExpr::t2() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::T2;
  return QExpr(std::move(n));
}

QExpr QExpr::binary(Kind k, const QExpr& a, const QExpr& b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->args = {a, b};
  return QExpr(std::move(n));
}

QExpr operator-(const QExpr& a) {
  auto n = std::make_shared<QExpr::Node>();
  n->kind = QExpr::Kind::Neg;
  n->args = {a};
  return QExpr(std::move(n));
}

QExpr pow(const QExpr& base, int exponent) {
  auto n = std::make_shared<QExpr::Node>();
  n->kind = QExpr::Kind::Pow;
  n->index = exponent;
  n->args = {base};
  return QExpr(std::move(n));
}

namespace {

int precedence(QExpr::Kind k) {
  switch (k) {
    case QExpr::Kind::Add:
    case QExpr::Kind::Sub:
      return 1;
    case QExpr::Kind::Mul:
    case QExpr::Kind::Div:
      return 2;
    case QExpr::Kind::Neg:
      return 3;
    case QExpr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string const_text(const GaussRational& c, bool latex) {
  auto rat = [latex](const BigRational& q) {
    if (!latex || q.is_integer()) return q.str();
    std::string sign = q.sign() < 0 ? "-" : "";
    return sign + "\\frac{" + BigInt(abs(q.num())).get_str() + "}{" + q.den().get_str() + "}";
  };
  if (c.is_real()) return rat(c.re);
  std::string im = c.im.is_one() ? "i" : (c.im == BigRational(-1) ? "-i" : rat(c.im) + (latex ? " i" : "*i"));
  if (c.re.is_zero()) return im;
  return rat(c.re) + (c.im.sign() < 0 ? "" : "+") + im;
}

// Compound constants (negative or complex) get parentheses in a product.
bool const_is_compound(const GaussRational& c) {
  return c.re.sign() < 0 || (!c.re.is_zero() && !c.im.is_zero()) || c.im.sign() < 0;
}

std::string render(const QExpr& e, bool latex, int outer) {
  std::string out;
  const int p = precedence(e.kind());
  switch (e.kind()) {
    case QExpr::Kind::Const:
      out = const_text(e.value(), latex);
      if (outer > 1 && const_is_compound(e.value())) out = (latex ? "\\left(" : "(") + out + (latex ? "\\right)" : ")");
      return out;
    case QExpr::Kind::Q:
      return "q";
    case QExpr::Kind::S:
      return latex ? "s_{" + std::to_string(e.index()) + "}" : "s" + std::to_string(e.index());
    case QExpr::Kind::T1:
      return latex ? "t_1" : "t1";
    case QExpr::Kind::T2:
      return latex ? "t_2" : "t2";
    case QExpr::Kind::Add:
      out = render(e.lhs(), latex, 1) + " + " + render(e.rhs(), latex, 1);
      break;
    case QExpr::Kind::Sub:
      out = render(e.lhs(), latex, 1) + " - " + render(e.rhs(), latex, 2);
      break;
    case QExpr::Kind::Mul:
      out = render(e.lhs(), latex, 2) + (latex ? " " : "*") + render(e.rhs(), latex, 3);
      break;
    case QExpr::Kind::Div:
      if (latex) return "\\frac{" + render(e.lhs(), true, 0) + "}{" + render(e.rhs(), true, 0) + "}";
      out = render(e.lhs(), latex, 2) + "/" + render(e.rhs(), latex, 3);
      break;
    case QExpr::Kind::Neg:
      out = "-" + render(e.lhs(), latex, 3);
      break;
    case QExpr::Kind::Pow:
      out = render(e.lhs(), latex, 5) + "^" + (latex ? "{" + std::to_string(e.index()) + "}" : std::to_string(e.index()));
      if (!latex && e.index() < 0) out = render(e.lhs(), latex, 5) + "^(" + std::to_string(e.index()) + ")";
      break;
  }
  if (p < outer) out = (latex ? "\\left(" : "(") + out + (latex ? "\\right)" : ")");
  return out;
}

GaussRatFunc lift(const GaussRational& c) { return GaussRatFunc(RatFunc2(c.re), RatFunc2(c.im)); }

GaussSeries series_pow(const GaussSeries& base, int exponent) {
  GaussSeries b = exponent < 0 ? base.inverse() : base;
  GaussSeries result = GaussSeries::constant(base.orders(), GaussRatFunc(1));
  for (int k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) result = result * b;
  return result;
}

GaussSeries expand(const QExpr& e, const SeriesOrders& orders) {
  switch (e.kind()) {
    case QExpr::Kind::Const:
      return GaussSeries::constant(orders, lift(e.value()));
    case QExpr::Kind::Q: {
      // -exp(i u) = -sum_m i^m u^m / m!
      GaussSeries out(orders);
      SeriesExp x(static_cast<std::size_t>(orders.r()) + 1, 0);
      GaussRational ipow(1);
      for (int m = 0; m <= orders.u_order; ++m) {
        x[0] = m;
        GaussRational c = -ipow * GaussRational(BigRational(BigInt(1), factorial(static_cast<unsigned>(m))));
        out.set(x, lift(c));
        ipow *= GaussRational::i();
      }
      return out;
    }
    case QExpr::Kind::S: {
      if (e.index() > orders.r()) {
        throw IndexOutOfRange("s" + std::to_string(e.index()) + " used with only " + std::to_string(orders.r()) +
                              " s variables");
      }
      SeriesExp x(static_cast<std::size_t>(orders.r()) + 1, 0);
      x[static_cast<std::size_t>(e.index())] = 1;
      return GaussSeries::monomial(orders, x, GaussRatFunc(1));
    }
    case QExpr::Kind::T1:
      return GaussSeries::constant(orders, GaussRatFunc(RatFunc2::t1()));
    case QExpr::Kind::T2:
      return GaussSeries::constant(orders, GaussRatFunc(RatFunc2::t2()));
    case QExpr::Kind::Add:
      return expand(e.lhs(), orders) + expand(e.rhs(), orders);
    case QExpr::Kind::Sub:
      return expand(e.lhs(), orders) - expand(e.rhs(), orders);
    case QExpr::Kind::Mul:
      return expand(e.lhs(), orders) * expand(e.rhs(), orders);
    case QExpr::Kind::Div: {
      GaussSeries den = expand(e.rhs(), orders);
      try {
        return expand(e.lhs(), orders) * den.inverse();
      } catch (const PoleAtOrigin&) {
        throw PoleAtOrigin("denominator '" + e.rhs().str() + "' is not invertible at u = s = 0");
      }
    }
    case QExpr::Kind::Neg:
      return -expand(e.lhs(), orders);
    case QExpr::Kind::Pow:
      try {
        return series_pow(expand(e.lhs(), orders), e.index());
      } catch (const PoleAtOrigin&) {
        throw PoleAtOrigin("base '" + e.lhs().str() + "' of a negative power is not invertible at u = s = 0");
      }
  }
  throw MalformedInput("unknown expression node");
}

}  // namespace

std::string QExpr::str() const { return render(*this, false, 0); }
std::string QExpr::latex() const { return render(*this, true, 0); }

GaussSeries expand_q_gauss(const QExpr& e, const SeriesOrders& orders) { return expand(e, orders); }

Series expand_q_closed_form(const QExpr& e, const SeriesOrders& orders) {
  GaussSeries g = expand(e, orders);
  Series out(orders);
  for (const auto& [x, c] : g.terms()) {
    if (!c.is_real()) {
      throw RealnessViolation("expansion of '" + e.str() + "' has imaginary coefficient " + c.im.str() + " at " +
                              exp_str(x));
    }
    out.set(x, c.re);
  }
  return out;
}

GaussRational evaluate(const QExpr& e, const QPoint& at) {
  switch (e.kind()) {
    case QExpr::Kind::Const:
      return e.value();
    case QExpr::Kind::Q:
      return at.q;
    case QExpr::Kind::S:
      if (e.index() > static_cast<int>(at.s.size())) {
        throw IndexOutOfRange("no value given for s" + std::to_string(e.index()));
      }
      return GaussRational(at.s[static_cast<std::size_t>(e.index() - 1)]);
    case QExpr::Kind::T1:
      return GaussRational(at.t1);
    case QExpr::Kind::T2:
      return GaussRational(at.t2);
    case QExpr::Kind::Add:
      return evaluate(e.lhs(), at) + evaluate(e.rhs(), at);
    case QExpr::Kind::Sub:
      return evaluate(e.lhs(), at) - evaluate(e.rhs(), at);
    case QExpr::Kind::Mul:
      return evaluate(e.lhs(), at) * evaluate(e.rhs(), at);
    case QExpr::Kind::Div: {
      GaussRational d = evaluate(e.rhs(), at);
      if (is_zero(d)) throw EvaluationError("denominator '" + e.rhs().str() + "' vanishes at the given point");
      return evaluate(e.lhs(), at) / d;
    }
    case QExpr::Kind::Neg:
      return -evaluate(e.lhs(), at);
    case QExpr::Kind::Pow: {
      GaussRational b = evaluate(e.lhs(), at);
      int k = e.index();
      if (k < 0) {
        if (is_zero(b)) throw EvaluationError("base '" + e.lhs().str() + "' of a negative power vanishes");
        b = GaussRational(1) / b;
        k = -k;
      }
      GaussRational result(1);
      for (int j = 0; j < k; ++j) result *= b;
      return result;
    }
  }
  throw MalformedInput("unknown expression node");
}

}  // namespace orbsym
