#pragma once

#include <compare>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbsym/algebra/big_rational.hpp"

namespace orbsym {

class SurfaceClass;

// Integer partition with parts stored weakly decreasing. The empty
// partition (size 0) is allowed and plays the role of a vacuous profile.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // "2+1+1"; the empty string and "0" give the empty partition.
  static Partition parse(std::string_view text);
  static Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // part -> multiplicity
  std::map<int, int> multiplicities() const;
  std::string str() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Cohomology weight on a single cycle.
class ClassLabel {
 public:
  enum class Kind { One, ECurve, Omega, FixedPt, General };

  static ClassLabel one() { return ClassLabel(Kind::One, 0); }
  static ClassLabel ecurve(int i) { return ClassLabel(Kind::ECurve, i); }
  static ClassLabel omega(int k) { return ClassLabel(Kind::Omega, k); }
  static ClassLabel fixed_pt(int k) { return ClassLabel(Kind::FixedPt, k); }
  // Arbitrary localized class; name identifies it in text and ordering.
  static ClassLabel general(std::shared_ptr<const SurfaceClass> cls, std::string name, int degree);

  // "1", "E3", "w2", "x1".
  static ClassLabel parse(std::string_view text);

  Kind kind() const { return kind_; }
  int index() const { return index_; }
  const std::shared_ptr<const SurfaceClass>& general_class() const { return general_; }
  // Cohomological degree in complex units: 0 for 1, 1 for divisors, 2 for points.
  int degree() const;
  bool is_divisor_or_one() const { return kind_ == Kind::One || kind_ == Kind::ECurve || kind_ == Kind::Omega; }
  std::string str() const;

  friend std::strong_ordering operator<=>(const ClassLabel& a, const ClassLabel& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (auto c = a.index_ <=> b.index_; c != 0) return c;
    return a.name_ <=> b.name_;
  }
  friend bool operator==(const ClassLabel& a, const ClassLabel& b) {
    return a.kind_ == b.kind_ && a.index_ == b.index_ && a.name_ == b.name_;
  }
  friend std::ostream& operator<<(std::ostream& os, const ClassLabel& l) { return os << l.str(); }

 private:
  ClassLabel(Kind k, int index) : kind_(k), index_(index) {}
  Kind kind_ = Kind::One;
  int index_ = 0;
  std::string name_;
  int general_degree_ = 0;
  std::shared_ptr<const SurfaceClass> general_;
};

using WeightedPart = std::pair<int, ClassLabel>;

// Cohomology-weighted partition: parts descending, ties broken by label.
class WeightedPartition {
 public:
  WeightedPartition() = default;
  explicit WeightedPartition(std::vector<WeightedPart> parts);

  // "2(E1)+1(1)"; a bare part such as "2" means weight 1.
  static WeightedPartition parse(std::string_view text);
  // λ with every part weighted by the same label.
  static WeightedPartition uniform(const Partition& p, const ClassLabel& l);

  const std::vector<WeightedPart>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  Partition underlying() const;
  // distinct (part, label) -> multiplicity
  std::map<WeightedPart, int> multiplicities() const;
  std::string str() const;

  // Multiset union.
  friend WeightedPartition operator+(const WeightedPartition& a, const WeightedPartition& b);

  friend auto operator<=>(const WeightedPartition&, const WeightedPartition&) = default;
  friend bool operator==(const WeightedPartition&, const WeightedPartition&) = default;
  friend std::ostream& operator<<(std::ostream& os, const WeightedPartition& p) { return os << p.str(); }

 private:
  std::vector<WeightedPart> parts_;
};

// Fixed-point class: component k is the partition placed at fixed point x_{k+1}.
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> comps) : comps_(std::move(comps)) {}
  static MultiPartition empty(int points) { return MultiPartition(std::vector<Partition>(static_cast<std::size_t>(points))); }

  const std::vector<Partition>& components() const { return comps_; }
  const Partition& operator[](std::size_t k) const { return comps_.at(k); }
  int points() const { return static_cast<int>(comps_.size()); }
  int size() const;
  int length() const;
  // As a weighted partition with fixed-point weights.
  WeightedPartition as_weighted() const;
  // Componentwise union; sub-multiset test and difference.
  friend MultiPartition operator+(const MultiPartition& a, const MultiPartition& b);
  bool contains(const MultiPartition& sub) const;
  MultiPartition minus(const MultiPartition& sub) const;
  std::string str() const;

  friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;
  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
  friend std::ostream& operator<<(std::ostream& os, const MultiPartition& p) { return os << p.str(); }

 private:
  std::vector<Partition> comps_;
};

// Π m_i! over part multiplicities.
BigInt aut_order(const Partition& p);
// Π over distinct (part, weight) pairs of multiplicity!.
BigInt aut_order_weighted(const WeightedPartition& p);
// z_σ = Π i^{m_i} m_i!, the centralizer order of a permutation of type σ.
BigInt centralizer_order(const Partition& p);
// lcm of parts (1 for the empty partition).
BigInt cycle_order(const Partition& p);
// n - ℓ(λ); throws ShapeError unless |λ| = n.
int age(const Partition& p, int n);

// All partitions of n in reverse lexicographic order, starting with (n).
std::vector<Partition> all_partitions(int n);

// Every weighted partition of n whose weights come from labels.
std::vector<WeightedPartition> all_weighted_partitions(int n, const std::vector<ClassLabel>& labels);
// 1, E_1..E_r, ω_1..ω_r, x_1..x_{r+1}.
std::vector<ClassLabel> labels_for_rank(int r);

// Every (θ, ν) with θ + ν = the input as multisets, each distinct pair once.
std::vector<std::pair<WeightedPartition, WeightedPartition>> enumerate_sub_splittings(const WeightedPartition& p);

}  // namespace orbsym
