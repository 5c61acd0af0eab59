#include "orbsym/hurwitz.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <numeric>

#include "orbsym/algebra/poly1.hpp"
#include "orbsym/errors.hpp"

namespace orbsym {

namespace {

constexpr int kHardMaxN = 10;

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  long x = std::strtol(v, &end, 10);
  if (*end != '\0' || x < 0) throw MalformedInput(std::string(name) + " must be a nonnegative integer, got '" + v + "'");
  return static_cast<int>(std::min<long>(x, kHardMaxN));
}

using Perm = std::array<std::uint8_t, kHardMaxN>;

// Elements of S_n with ranks, inverses and cycle types.
struct SymGroup {
  int n = 0;
  std::vector<Perm> elems;
  std::vector<int> inverse;
  std::vector<int> type;  // index into classes
  std::vector<Partition> classes;
  std::map<Partition, int> class_index;
  std::vector<std::vector<int>> members;  // class -> element ranks
  int identity = 0;

  int rank(const Perm& p) const {
    // Lehmer code, matching lexicographic enumeration order.
    int r = 0;
    for (int i = 0; i < n; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n; ++j) smaller += p[static_cast<std::size_t>(j)] < p[static_cast<std::size_t>(i)];
      r = r * (n - i) + smaller;
    }
    return r;
  }

  // (a b)(x) = a(b(x)): apply b first.
  int compose(int a, int b) const {
    Perm c{};
    const Perm& pa = elems[static_cast<std::size_t>(a)];
    const Perm& pb = elems[static_cast<std::size_t>(b)];
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = pa[pb[static_cast<std::size_t>(i)]];
    return rank(c);
  }
};

Partition cycle_type(const Perm& p, int n) {
  std::vector<int> parts;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

std::shared_ptr<const SymGroup> build_group(int n) {
  auto g = std::make_shared<SymGroup>();
  g->n = n;
  g->classes = all_partitions(n);
  for (std::size_t k = 0; k < g->classes.size(); ++k) g->class_index[g->classes[k]] = static_cast<int>(k);
  g->members.resize(g->classes.size());
  Perm p{};
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  do {
    g->elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + n));
  g->inverse.resize(g->elems.size());
  g->type.resize(g->elems.size());
  for (std::size_t r = 0; r < g->elems.size(); ++r) {
    Perm inv{};
    for (int i = 0; i < n; ++i) inv[g->elems[r][static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
    g->inverse[r] = g->rank(inv);
    int t = g->class_index.at(cycle_type(g->elems[r], n));
    g->type[r] = t;
    g->members[static_cast<std::size_t>(t)].push_back(static_cast<int>(r));
  }
  g->identity = 0;
  return g;
}

std::shared_ptr<const SymGroup> group(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const SymGroup>> groups;
  std::lock_guard lock(mu);
  auto& slot = groups[n];
  if (!slot) slot = build_group(n);
  return slot;
}

void check_sizes(int n, const std::vector<Partition>& profiles) {
  if (n < 0) throw ShapeError("negative symmetric group degree");
  for (const auto& p : profiles) {
    if (p.size() != n) {
      throw ShapeError("profile " + p.str() + " has size " + std::to_string(p.size()) + ", expected " +
                       std::to_string(n));
    }
  }
}

void check_budget(int n, int budget, const char* what, const char* env) {
  if (n > budget) {
    throw ResourceError(std::string(what) + ": n = " + std::to_string(n) + " exceeds the bound n <= " +
                        std::to_string(budget) + " (raise it with " + env + ", hard limit " +
                        std::to_string(kHardMaxN) + ")");
  }
}

// counts[x] = number of tuples with the given types whose product is x.
std::vector<BigInt> product_counts(const SymGroup& g, const std::vector<Partition>& profiles) {
  std::vector<BigInt> cur(g.elems.size(), 0);
  cur[static_cast<std::size_t>(g.identity)] = 1;
  for (const auto& prof : profiles) {
    const auto& cls = g.members[static_cast<std::size_t>(g.class_index.at(prof))];
    std::vector<BigInt> next(g.elems.size(), 0);
    for (std::size_t x = 0; x < cur.size(); ++x) {
      if (cur[x] == 0) continue;
      for (int y : cls) next[static_cast<std::size_t>(g.compose(static_cast<int>(x), y))] += cur[x];
    }
    cur = std::move(next);
  }
  return cur;
}

BigRational over_factorial(const BigInt& count, int n) { return BigRational(count, factorial(static_cast<unsigned>(n))); }

// c[a][b][v] = #{(g, h): g in class a, h in class b, g h = fixed z of class v}.
struct ClassTable {
  std::vector<std::vector<std::vector<BigInt>>> c;
};

std::shared_ptr<const ClassTable> class_table(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const ClassTable>> tables;
  {
    std::lock_guard lock(mu);
    auto it = tables.find(n);
    if (it != tables.end()) return it->second;
  }
  auto g = group(n);
  const std::size_t k = g->classes.size();
  auto t = std::make_shared<ClassTable>();
  t->c.assign(k, std::vector<std::vector<BigInt>>(k, std::vector<BigInt>(k, 0)));
  for (std::size_t v = 0; v < k; ++v) {
    const int z = g->members[v].front();
    for (std::size_t x = 0; x < g->elems.size(); ++x) {
      // h = x^{-1} z
      const int h = g->compose(g->inverse[x], z);
      t->c[static_cast<std::size_t>(g->type[x])][static_cast<std::size_t>(g->type[static_cast<std::size_t>(h)])][v] += 1;
    }
  }
  std::lock_guard lock(mu);
  tables.emplace(n, t);
  return t;
}

// Truncated Taylor coefficients of sinh(c x)/(c x) in x, up to degree deg.
Poly1 sinh_ratio(const BigRational& c, int deg) {
  std::vector<BigRational> co(static_cast<std::size_t>(deg) + 1, BigRational(0));
  for (int j = 0; 2 * j <= deg; ++j) {
    co[static_cast<std::size_t>(2 * j)] = pow(c, 2 * j) / BigRational(factorial(static_cast<unsigned>(2 * j + 1)));
  }
  return Poly1(std::move(co));
}

Poly1 truncate(const Poly1& p, int deg) {
  std::vector<BigRational> c;
  for (int k = 0; k <= deg && k <= p.degree(); ++k) c.push_back(p.coeff(k));
  return Poly1(std::move(c));
}

// 1/f mod x^(deg+1) for f with f(0) = 1.
Poly1 series_inverse(const Poly1& f, int deg) {
  std::vector<BigRational> inv(static_cast<std::size_t>(deg) + 1, BigRational(0));
  inv[0] = BigRational(1) / f.coeff(0);
  for (int k = 1; k <= deg; ++k) {
    BigRational acc(0);
    for (int j = 1; j <= k; ++j) acc += f.coeff(j) * inv[static_cast<std::size_t>(k - j)];
    inv[static_cast<std::size_t>(k)] = -acc * inv[0];
  }
  return Poly1(std::move(inv));
}

}  // namespace

int enumeration_budget() { return env_int("ORBSYM_MAX_N", 8); }
int class_table_budget() { return env_int("ORBSYM_MAX_CLASS_N", 10); }

BigRational hurwitz(const HurwitzQuery& q) {
  check_sizes(q.n, q.profiles);
  check_budget(q.n, enumeration_budget(), "element enumeration", "ORBSYM_MAX_N");
  if (q.n == 0) return BigRational(1);
  auto g = group(q.n);
  auto counts = product_counts(*g, q.profiles);
  return over_factorial(counts[static_cast<std::size_t>(g->identity)], q.n);
}

BigRational hurwitz_refined(const Partition& sigma, const std::vector<Partition>& left,
                            const std::vector<Partition>& right) {
  const int n = sigma.size();
  check_sizes(n, left);
  check_sizes(n, right);
  if (n == 0) return BigRational(1);
  check_budget(n, enumeration_budget(), "element enumeration", "ORBSYM_MAX_N");
  auto g = group(n);
  auto f = product_counts(*g, left);
  auto h = product_counts(*g, right);
  BigInt total = 0;
  for (int x : g->members[static_cast<std::size_t>(g->class_index.at(sigma))]) {
    total += f[static_cast<std::size_t>(x)] * h[static_cast<std::size_t>(g->inverse[static_cast<std::size_t>(x)])];
  }
  return over_factorial(total, n);
}

BigRational hurwitz_fast(const HurwitzQuery& q) {
  check_sizes(q.n, q.profiles);
  check_budget(q.n, class_table_budget(), "class multiplication table", "ORBSYM_MAX_CLASS_N");
  if (q.n == 0) return BigRational(1);
  auto g = group(q.n);
  auto t = class_table(q.n);
  const std::size_t k = g->classes.size();
  const std::size_t id_class = static_cast<std::size_t>(g->type[static_cast<std::size_t>(g->identity)]);
  // v[c] = number of tuples whose product is one fixed element of class c.
  std::vector<BigInt> v(k, 0);
  v[id_class] = 1;
  for (const auto& prof : q.profiles) {
    const std::size_t b = static_cast<std::size_t>(g->class_index.at(prof));
    // Tuples ending in class b with product z_w: (count over products x with x h = z_w).
    std::vector<BigInt> next(k, 0);
    for (std::size_t a = 0; a < k; ++a) {
      if (v[a] == 0) continue;
      // For fixed z_w, the number of x in class a with x^{-1} z_w in class b is c[a][b][w];
      // each such x is reached by v[a] tuples.
      for (std::size_t w = 0; w < k; ++w) {
        if (t->c[a][b][w] != 0) next[w] += v[a] * t->c[a][b][w];
      }
    }
    v = std::move(next);
  }
  return over_factorial(v[id_class], q.n);
}

BigRational one_part_double_hurwitz(const Partition& sigma, int b) {
  if (b < 0) throw MalformedInput("number of simple branch points must be nonnegative");
  const int k = sigma.size();
  if (k == 0) return BigRational(0);
  const int deg = b - sigma.length() + 1;
  if (deg < 0 || deg % 2 != 0) return BigRational(0);
  Poly1 f = series_inverse(sinh_ratio(BigRational(1, 2), deg), deg);
  for (int part : sigma.parts()) f = truncate(f * sinh_ratio(BigRational(part, 2), deg), deg);
  BigRational coeff = f.coeff(deg);
  BigRational scale = BigRational(factorial(static_cast<unsigned>(b))) * pow(BigRational(k), b - 1) /
                      BigRational(aut_order(sigma));
  return coeff * scale;
}

BigRational HurwitzCache::get(const HurwitzQuery& q) {
  std::vector<Partition> key = q.profiles;
  std::sort(key.begin(), key.end());
  {
    std::shared_lock lock(mu_);
    auto it = general_.find(key);
    if (it != general_.end()) return it->second;
  }
  BigRational v = hurwitz_fast(q);
  std::unique_lock lock(mu_);
  general_.emplace(std::move(key), v);
  return v;
}

BigRational HurwitzCache::get_one_part(const Partition& sigma, int b) {
  auto key = std::make_pair(sigma, b);
  {
    std::shared_lock lock(mu_);
    auto it = one_part_.find(key);
    if (it != one_part_.end()) return it->second;
  }
  BigRational v = one_part_double_hurwitz(sigma, b);
  std::unique_lock lock(mu_);
  one_part_.emplace(std::move(key), v);
  return v;
}

std::size_t HurwitzCache::size() const {
  std::shared_lock lock(mu_);
  return general_.size() + one_part_.size();
}

void HurwitzCache::clear() {
  std::unique_lock lock(mu_);
  general_.clear();
  one_part_.clear();
}

HurwitzCache& hurwitz_cache() {
  static HurwitzCache cache;
  return cache;
}

}  // namespace orbsym
