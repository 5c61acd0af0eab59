#include "orbsym/surface.hpp"

#include <map>
#include <mutex>

#include "orbsym/algebra/linalg.hpp"
#include "orbsym/errors.hpp"

namespace orbsym {

namespace {

void check_index(int k, int lo, int hi, const char* what) {
  if (k < lo || k > hi) {
    throw IndexOutOfRange(std::string(what) + " index " + std::to_string(k) + " outside " + std::to_string(lo) + ".." +
                          std::to_string(hi));
  }
}

// Restrictions of ω_1..ω_r, computed once per r.
const std::vector<SurfaceClass>& omegas(const TangentWeights& w) {
  static std::mutex mu;
  static std::map<int, std::vector<SurfaceClass>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(w.r);
  if (it != cache.end()) return it->second;
  // ω_k = Σ_j c_jk E_j with Gram * c = identity.
  FuncMatrix gram = ecurve_gram(w);
  FuncMatrix id = FuncMatrix::Constant(w.r, w.r, RatFunc2(0));
  for (int k = 0; k < w.r; ++k) id(k, k) = RatFunc2(1);
  FuncMatrix c = solve_exact(gram, id);
  std::vector<SurfaceClass> out;
  for (int k = 0; k < w.r; ++k) {
    SurfaceClass acc = SurfaceClass::zero(w.points());
    for (int j = 0; j < w.r; ++j) {
      if (!c(j, k).is_zero()) acc += class_of(ClassLabel::ecurve(j + 1), w) * c(j, k);
    }
    out.push_back(acc);
  }
  return cache.emplace(w.r, std::move(out)).first->second;
}

}  // namespace

TangentWeights tangent_weights(int r) {
  if (r < 1) throw MalformedInput("A_r needs r >= 1, got " + std::to_string(r));
  TangentWeights w;
  w.r = r;
  const Poly2 t1 = Poly2::t1(), t2 = Poly2::t2();
  for (int i = 1; i <= r + 1; ++i) {
    w.L.push_back(Poly2(r - i + 2) * t1 + Poly2(1 - i) * t2);
    w.R.push_back(Poly2(-r + i - 1) * t1 + Poly2(i) * t2);
  }
  return w;
}

SurfaceClass& SurfaceClass::operator+=(const SurfaceClass& o) {
  if (points() != o.points()) throw ShapeError("adding classes on different surfaces");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
  return *this;
}

SurfaceClass& SurfaceClass::operator*=(const RatFunc2& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

SurfaceClass operator*(const SurfaceClass& a, const SurfaceClass& b) {
  if (a.points() != b.points()) throw ShapeError("multiplying classes on different surfaces");
  std::vector<RatFunc2> c;
  for (std::size_t k = 0; k < a.coords_.size(); ++k) c.push_back(a.coords_[k] * b.coords_[k]);
  return SurfaceClass(std::move(c));
}

CurveClass CurveClass::chain(int r, int i, int j, int mult) {
  if (i < 1 || j > r || i > j) throw IndexOutOfRange("chain E_" + std::to_string(i) + std::to_string(j) + " in rank " + std::to_string(r));
  CurveClass c;
  c.d.assign(static_cast<std::size_t>(r), 0);
  for (int k = i; k <= j; ++k) c.d[static_cast<std::size_t>(k - 1)] = mult;
  return c;
}

bool CurveClass::is_zero() const {
  for (int x : d) {
    if (x != 0) return false;
  }
  return true;
}

bool CurveClass::as_chain(int& i, int& j, int& mult) const {
  int first = -1, last = -1;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] == 0) continue;
    if (first < 0) first = static_cast<int>(k);
    last = static_cast<int>(k);
  }
  if (first < 0) return false;
  const int m = d[static_cast<std::size_t>(first)];
  if (m <= 0) return false;
  for (int k = first; k <= last; ++k) {
    if (d[static_cast<std::size_t>(k)] != m) return false;
  }
  i = first + 1;
  j = last + 1;
  mult = m;
  return true;
}

SurfaceClass class_of(const ClassLabel& label, const TangentWeights& w) {
  const int p = w.points();
  switch (label.kind()) {
    case ClassLabel::Kind::One:
      return SurfaceClass(std::vector<RatFunc2>(static_cast<std::size_t>(p), RatFunc2(1)));
    case ClassLabel::Kind::FixedPt: {
      check_index(label.index(), 1, p, "fixed point");
      SurfaceClass c = SurfaceClass::zero(p);
      std::vector<RatFunc2> coords = c.coords();
      coords[static_cast<std::size_t>(label.index() - 1)] = RatFunc2(w.euler(label.index()));
      return SurfaceClass(std::move(coords));
    }
    case ClassLabel::Kind::ECurve: {
      const int i = label.index();
      check_index(i, 1, w.r, "exceptional curve");
      std::vector<RatFunc2> coords(static_cast<std::size_t>(p));
      coords[static_cast<std::size_t>(i - 1)] = RatFunc2(w.L[static_cast<std::size_t>(i - 1)]);
      coords[static_cast<std::size_t>(i)] = RatFunc2(w.R[static_cast<std::size_t>(i)]);
      return SurfaceClass(std::move(coords));
    }
    case ClassLabel::Kind::Omega:
      check_index(label.index(), 1, w.r, "dual divisor");
      return omegas(w)[static_cast<std::size_t>(label.index() - 1)];
    case ClassLabel::Kind::General: {
      if (!label.general_class()) throw MalformedInput("general label '" + label.str() + "' carries no class");
      const SurfaceClass& c = *label.general_class();
      if (c.points() != p) throw ShapeError("general class '" + label.str() + "' lives on a different A_r");
      return c;
    }
  }
  throw MalformedInput("unknown class label");
}

RatFunc2 integrate(const SurfaceClass& a, const SurfaceClass& b, const TangentWeights& w) {
  if (a.points() != w.points() || b.points() != w.points()) throw ShapeError("integrand lives on a different A_r");
  RatFunc2 acc;
  for (int k = 1; k <= w.points(); ++k) {
    if (a.at(k).is_zero() || b.at(k).is_zero()) continue;
    acc += a.at(k) * b.at(k) / RatFunc2(w.euler(k));
  }
  return acc;
}

RatFunc2 integrate(const SurfaceClass& a, const TangentWeights& w) {
  return integrate(a, class_of(ClassLabel::one(), w), w);
}

std::vector<int> curve_exponents(const CurveClass& beta) { return beta.d; }

RatMatrix intersection_matrix(int r) {
  RatMatrix c = RatMatrix::Constant(r, r, BigRational(0));
  for (int i = 0; i < r; ++i) {
    c(i, i) = BigRational(-2);
    if (i + 1 < r) c(i, i + 1) = c(i + 1, i) = BigRational(1);
  }
  return c;
}

FuncMatrix ecurve_gram(const TangentWeights& w) {
  FuncMatrix g(w.r, w.r);
  for (int i = 0; i < w.r; ++i) {
    for (int j = 0; j < w.r; ++j) {
      g(i, j) = integrate(class_of(ClassLabel::ecurve(i + 1), w), class_of(ClassLabel::ecurve(j + 1), w), w);
    }
  }
  return g;
}

BigRational e_dot(const ClassLabel& gamma, int i, int j, int r) {
  if (i < 1 || j > r || i > j) throw IndexOutOfRange("chain E_" + std::to_string(i) + "," + std::to_string(j) + " in rank " + std::to_string(r));
  switch (gamma.kind()) {
    case ClassLabel::Kind::One:
      return BigRational(0);
    case ClassLabel::Kind::Omega:
      check_index(gamma.index(), 1, r, "dual divisor");
      return BigRational(i <= gamma.index() && gamma.index() <= j ? 1 : 0);
    case ClassLabel::Kind::ECurve: {
      const int m = gamma.index();
      check_index(m, 1, r, "exceptional curve");
      BigRational acc(0);
      for (int l = i; l <= j; ++l) {
        if (l == m) acc += BigRational(-2);
        if (l == m - 1 || l == m + 1) acc += BigRational(1);
      }
      return acc;
    }
    default:
      throw UnsupportedWeight("connected invariants take weights 1 or divisors, got '" + gamma.str() + "'");
  }
}

}  // namespace orbsym
