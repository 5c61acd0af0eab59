#pragma once

#include <map>
#include <shared_mutex>
#include <vector>

#include "orbsym/algebra/big_rational.hpp"
#include "orbsym/partitions.hpp"

namespace orbsym {

// Ramification data over S_n; every profile must have size n.
struct HurwitzQuery {
  int n = 0;
  std::vector<Partition> profiles;
};

// Largest n accepted by the element-level enumerator (default 8, override
// with the ORBSYM_MAX_N environment variable).
int enumeration_budget();
// Largest n for which class multiplication tables are built (default 10,
// override with ORBSYM_MAX_CLASS_N).
int class_table_budget();

// (1/n!) #{(g_1..g_s): g_i of type η_i, g_1...g_s = 1}, by enumerating
// S_n element by element. Throws ResourceError above the budget.
BigRational hurwitz(const HurwitzQuery& q);

// (1/n!) #{(g_1..g_s, h_1..h_t): g_i of type left_i, h_j of type right_j,
// g_1...g_s of type σ, g_1...g_s h_1...h_t = 1}. Vacuous σ gives 1.
BigRational hurwitz_refined(const Partition& sigma, const std::vector<Partition>& left,
                            const std::vector<Partition>& right);

// Same value as hurwitz(), via the conjugacy-class multiplication table of S_n.
BigRational hurwitz_fast(const HurwitzQuery& q);

// H(σ, (2)^b, (k)) for σ a partition of k, from the sinh generating function:
// |Aut σ| H / (b! k^(b-1)) = [t^(b-ℓ(σ)+1)] (t/2)/sinh(t/2) Π sinh(σ_i t/2)/(σ_i t/2).
BigRational one_part_double_hurwitz(const Partition& sigma, int b);

// Memo table keyed on the sorted profile list. Reads run concurrently;
// concurrent inserts of one key store the same value.
class HurwitzCache {
 public:
  BigRational get(const HurwitzQuery& q);
  BigRational get_one_part(const Partition& sigma, int b);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mu_;
  std::map<std::vector<Partition>, BigRational> general_;
  std::map<std::pair<Partition, int>, BigRational> one_part_;
};

HurwitzCache& hurwitz_cache();

}  // namespace orbsym
