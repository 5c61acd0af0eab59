#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbsym/algebra/trunc_series.hpp"
#include "orbsym/partitions.hpp"
#include "orbsym/surface.hpp"

namespace orbsym {

// (a, β): a simple (2)-markings and curve class β.
struct TwistedDegree {
  int a = 0;
  CurveClass beta;
};

// Divisor insertion: (2) or D_ℓ = 1(1)^{n-1}1(ω_ℓ). The identity marker "1"
// is also accepted as a table key for β = 0 two-point data.
struct DivisorSymbol {
  enum class Kind { Twisted, Untwisted, Identity };
  Kind kind = Kind::Twisted;
  int index = 0;  // ℓ for Untwisted

  static DivisorSymbol twisted() { return {Kind::Twisted, 0}; }
  static DivisorSymbol untwisted(int l) { return {Kind::Untwisted, l}; }
  static DivisorSymbol identity() { return {Kind::Identity, 0}; }
  // "(2)", "D1", "1"
  static DivisorSymbol parse(std::string_view text);
  std::string str() const;
  // The Chen-Ruan class it stands for in Sym^n.
  WeightedPartition as_class(int n) const;

  friend bool operator==(const DivisorSymbol&, const DivisorSymbol&) = default;
};

// β = 0 parts of 3-point functions, supplied from outside. Values are
// u-series at s = 0 stored as (a, coefficient) lists. Lookups try both
// orders of the two basis elements.
class ZeroDegreeTable {
 public:
  using Entry = std::vector<std::pair<int, RatFunc2>>;

  static std::string key(const WeightedPartition& a1, const DivisorSymbol& d, const WeightedPartition& a2);

  void set(const WeightedPartition& a1, const DivisorSymbol& d, const WeightedPartition& a2, Entry e);
  std::optional<Entry> find(const WeightedPartition& a1, const DivisorSymbol& d, const WeightedPartition& a2) const;
  const std::map<std::string, Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // {"(2(E1)|D1|2(E1))": [[0, "-2*t1 - 2*t2"], ...], ...}
  std::string to_json() const;
  static ZeroDegreeTable from_json(std::string_view text);
  static ZeroDegreeTable load(const std::string& path);
  void save(const std::string& path) const;

  friend bool operator==(const ZeroDegreeTable&, const ZeroDegreeTable&) = default;

 private:
  std::map<std::string, Entry> entries_;
};

// Connected 2-point extended invariant of μ(γ), ν(δ) (partitions of the
// same k) in degree (a, β). Weights must be 1 or divisors.
// Throws UnsupportedWeight for fixed-point or general weights and
// OutOfScope for β = 0. Zero for a < 0, k = 0, or β not a chain class.
Poly2 connected_two_point(const WeightedPartition& mu, const WeightedPartition& nu, const TwistedDegree& t,
                          const TangentWeights& w);

// Possibly disconnected 2-point extended invariant, assembled from
// pairings of the split-off parts and connected invariants of the rest.
RatFunc2 disconnected_two_point(const WeightedPartition& m1, const WeightedPartition& m2, const TwistedDegree& t,
                                const TangentWeights& w);

// β ≠ 0 part of ⟨⟨m1, m2⟩⟩ truncated at the given orders.
Series two_point_series(const WeightedPartition& m1, const WeightedPartition& m2, const SeriesOrders& orders,
                        const TangentWeights& w);

struct DivisorSeries {
  Series series;
  // Table keys that were needed but missing; their contribution is absent.
  std::vector<std::string> gaps;
};

// ⟨⟨a1, D, a2⟩⟩ via the divisor equations: d/du of the 2-point series for
// D = (2), s_ℓ ∂/∂s_ℓ plus the table's s = 0 boundary for D = D_ℓ.
DivisorSeries three_point_divisor_series(const WeightedPartition& a1, const DivisorSymbol& d,
                                         const WeightedPartition& a2, const SeriesOrders& orders,
                                         const TangentWeights& w, const ZeroDegreeTable& table);

}  // namespace orbsym
