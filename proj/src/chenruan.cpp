#include "orbsym/chenruan.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <tuple>

#include "orbsym/algebra/linalg.hpp"
#include "orbsym/errors.hpp"

namespace orbsym {

CRClass CRClass::basis(const MultiPartition& s, const RatFunc2& c) {
  CRClass x(s.size(), s.points());
  x.add(s, c);
  return x;
}

RatFunc2 CRClass::coeff(const MultiPartition& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? RatFunc2() : it->second;
}

void CRClass::add(const MultiPartition& s, const RatFunc2& c) {
  if (s.size() != n_ || s.points() != points_) throw ShapeError("fixed-point class " + s.str() + " does not fit");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CRClass& CRClass::operator+=(const CRClass& o) {
  if (terms_.empty() && n_ == 0 && points_ == 0) {
    n_ = o.n_;
    points_ = o.points_;
  }
  if (o.n_ != n_ || o.points_ != points_) throw ShapeError("adding Chen-Ruan classes of different shapes");
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

CRClass& CRClass::operator*=(const RatFunc2& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, x] : terms_) x *= c;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const CRClass& c) {
  if (c.terms_.empty()) return os << "0";
  bool first = true;
  for (const auto& [s, x] : c.terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << x << ")*" << s;
  }
  return os;
}

RatFunc2 t_weight(const MultiPartition& s, const TangentWeights& w) {
  if (s.points() != w.points()) throw ShapeError("fixed-point class " + s.str() + " has the wrong number of points");
  Poly2 t(1);
  for (int k = 1; k <= w.points(); ++k) {
    const int len = s[static_cast<std::size_t>(k - 1)].length();
    if (len > 0) t *= pow(w.euler(k), static_cast<unsigned>(len));
  }
  return RatFunc2(t);
}

BigRational h_bold(const MultiPartition& s) {
  BigInt z = 1;
  for (const auto& p : s.components()) z *= centralizer_order(p);
  return BigRational(BigInt(1), z);
}

CRClass expand(const WeightedPartition& lambda, const TangentWeights& w) {
  const int p = w.points();
  const auto& parts = lambda.parts();
  const std::size_t len = parts.size();
  // c[i][k] = η_i|x_k / (L_k R_k)
  std::vector<std::vector<RatFunc2>> c(len);
  for (std::size_t i = 0; i < len; ++i) {
    SurfaceClass eta = class_of(parts[i].second, w);
    for (int k = 1; k <= p; ++k) c[i].push_back(eta.at(k) / RatFunc2(w.euler(k)));
  }
  const RatFunc2 inv_aut = RatFunc2(BigRational(BigInt(1), aut_order_weighted(lambda)));
  CRClass out(lambda.size(), p);
  std::vector<int> assign(len, 0);
  for (;;) {
    RatFunc2 coeff(1);
    for (std::size_t i = 0; i < len && !coeff.is_zero(); ++i) coeff *= c[i][static_cast<std::size_t>(assign[i])];
    if (!coeff.is_zero()) {
      std::vector<std::vector<int>> comps(static_cast<std::size_t>(p));
      for (std::size_t i = 0; i < len; ++i) comps[static_cast<std::size_t>(assign[i])].push_back(parts[i].first);
      std::vector<Partition> ps;
      for (auto& v : comps) ps.emplace_back(std::move(v));
      MultiPartition s(std::move(ps));
      out.add(s, coeff * RatFunc2(BigRational(aut_order_weighted(s.as_weighted()))) * inv_aut);
    }
    std::size_t i = 0;
    while (i < len && assign[i] == p - 1) assign[i++] = 0;
    if (i == len) break;
    ++assign[i];
  }
  return out;
}

RatFunc2 coefficient(const WeightedPartition& lambda, const MultiPartition& s, const TangentWeights& w) {
  if (lambda.size() != s.size()) throw ShapeError("coefficient of a fixed-point class of a different size");
  return expand(lambda, w).coeff(s);
}

RatFunc2 pairing_fixed(const MultiPartition& a, const MultiPartition& b, const TangentWeights& w) {
  if (a.size() != b.size()) throw ShapeError("pairing fixed-point classes of sizes " + std::to_string(a.size()) +
                                             " and " + std::to_string(b.size()));
  if (!(a == b)) return RatFunc2();
  return RatFunc2(h_bold(a)) * t_weight(a, w);
}

RatFunc2 pairing(const CRClass& a, const CRClass& b, const TangentWeights& w) {
  if (a.n() != b.n()) throw ShapeError("pairing Chen-Ruan classes of different n");
  RatFunc2 acc;
  for (const auto& [s, x] : a.terms()) {
    RatFunc2 y = b.coeff(s);
    if (!y.is_zero()) acc += x * y * pairing_fixed(s, s, w);
  }
  return acc;
}

RatFunc2 pairing(const WeightedPartition& a, const WeightedPartition& b, const TangentWeights& w) {
  if (a.size() != b.size()) throw ShapeError("pairing weighted partitions of different sizes");
  if (!(a.underlying() == b.underlying())) return RatFunc2();
  return pairing(expand(a, w), expand(b, w), w);
}

namespace {

// ∫ η ε on A_r, memoized for the named labels.
RatFunc2 label_integral(const ClassLabel& a, const ClassLabel& b, const TangentWeights& w) {
  if (a.kind() == ClassLabel::Kind::General || b.kind() == ClassLabel::Kind::General) {
    return integrate(class_of(a, w), class_of(b, w), w);
  }
  static std::mutex mu;
  static std::map<std::tuple<int, ClassLabel, ClassLabel>, RatFunc2> memo;
  const auto key = a <= b ? std::make_tuple(w.r, a, b) : std::make_tuple(w.r, b, a);
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  RatFunc2 v = integrate(class_of(a, w), class_of(b, w), w);
  std::lock_guard lock(mu);
  memo.emplace(key, v);
  return v;
}

}  // namespace

RatFunc2 pairing_direct(const WeightedPartition& a, const WeightedPartition& b, const TangentWeights& w) {
  if (a.size() != b.size()) throw ShapeError("pairing weighted partitions of different sizes");
  if (!(a.underlying() == b.underlying())) return RatFunc2();
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  const std::size_t len = pa.size();
  std::vector<std::vector<RatFunc2>> ints(len, std::vector<RatFunc2>(len));
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < len; ++j) {
      if (pa[i].first == pb[j].first) {
        ints[i][j] = label_integral(pa[i].second, pb[j].second, w);
      }
    }
  }
  std::vector<std::size_t> perm(len);
  std::iota(perm.begin(), perm.end(), 0);
  RatFunc2 sum;
  do {
    RatFunc2 term(1);
    for (std::size_t i = 0; i < len && !term.is_zero(); ++i) {
      if (pa[i].first != pb[perm[i]].first) {
        term = RatFunc2();
        break;
      }
      term *= ints[i][perm[i]];
    }
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  BigInt norm = aut_order_weighted(a) * aut_order_weighted(b);
  for (const auto& [part, label] : pa) norm *= part;
  return sum * RatFunc2(BigRational(BigInt(1), norm));
}

PairingMatrix gram_matrix(const std::vector<WeightedPartition>& basis, const TangentWeights& w) {
  const auto m = static_cast<Eigen::Index>(basis.size());
  std::vector<CRClass> ex;
  for (const auto& b : basis) ex.push_back(expand(b, w));
  FuncMatrix g = FuncMatrix::Constant(m, m, RatFunc2());
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i; j < m; ++j) {
      const auto& bi = basis[static_cast<std::size_t>(i)];
      const auto& bj = basis[static_cast<std::size_t>(j)];
      if (bi.size() != bj.size()) throw ShapeError("basis mixes different n");
      if (!(bi.underlying() == bj.underlying())) continue;
      g(i, j) = pairing(ex[static_cast<std::size_t>(i)], ex[static_cast<std::size_t>(j)], w);
      g(j, i) = g(i, j);
    }
  }
  return {basis, g};
}

DualBasis dual_basis(const std::vector<WeightedPartition>& basis, const TangentWeights& w) {
  PairingMatrix pm = gram_matrix(basis, w);
  const auto m = static_cast<Eigen::Index>(basis.size());
  FuncMatrix coeffs = FuncMatrix::Constant(m, m, RatFunc2());
  std::map<Partition, std::vector<Eigen::Index>> blocks;
  for (Eigen::Index i = 0; i < m; ++i) blocks[basis[static_cast<std::size_t>(i)].underlying()].push_back(i);
  for (const auto& [shape, idx] : blocks) {
    const auto k = static_cast<Eigen::Index>(idx.size());
    FuncMatrix g(k, k);
    for (Eigen::Index a = 0; a < k; ++a) {
      for (Eigen::Index b = 0; b < k; ++b) g(a, b) = pm.gram(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]);
    }
    FuncMatrix inv;
    try {
      inv = inverse_exact(g);
    } catch (const DegenerateBasis&) {
      throw DegenerateBasis("Gram block of shape " + shape.str() + " is singular; the basis does not span it");
    }
    for (Eigen::Index a = 0; a < k; ++a) {
      for (Eigen::Index b = 0; b < k; ++b) coeffs(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]) = inv(a, b);
    }
  }
  DualBasis d{basis, coeffs, {}};
  std::vector<CRClass> ex;
  for (const auto& b : basis) ex.push_back(expand(b, w));
  for (Eigen::Index j = 0; j < m; ++j) {
    CRClass acc(basis[static_cast<std::size_t>(j)].size(), w.points());
    for (Eigen::Index i = 0; i < m; ++i) {
      if (!coeffs(i, j).is_zero()) acc += ex[static_cast<std::size_t>(i)] * coeffs(i, j);
    }
    d.classes.push_back(acc);
  }
  return d;
}

}  // namespace orbsym
