#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orbsym/algebra/numtraits.hpp"
#include "orbsym/algebra/poly1.hpp"
#include "orbsym/algebra/qexpr.hpp"
#include "orbsym/invariants.hpp"

namespace orbsym {

// Matrix of D * - in a basis: entries[i][j] is the coefficient of basis[i]
// in D * basis[j]. gaps holds the (i, j) whose β = 0 part was unavailable.
struct OperatorMatrix {
  std::vector<WeightedPartition> basis;
  DivisorSymbol divisor;
  SeriesOrders orders;
  std::vector<std::vector<Series>> entries;
  std::set<std::pair<int, int>> gaps;

  int size() const { return static_cast<int>(basis.size()); }
  const Series& at(int i, int j) const { return entries.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }
  friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;
};

// Contracts ⟨⟨basis[γ], D, basis[j]⟩⟩ against the dual basis.
OperatorMatrix divisor_operator(int n, int r, const DivisorSymbol& d, const std::vector<WeightedPartition>& basis,
                                const SeriesOrders& orders, const TangentWeights& w, const ZeroDegreeTable& table);

using QMatrix = std::vector<std::vector<QExpr>>;

// {1(E1)1(E1), 2(E1), 1(1)1(E1), 2(1), 1(1)1(1)} for Sym^2(A_1).
std::vector<WeightedPartition> basis_a1n2();
// Closed form of D_1 * - on Sym^2(A_1) in basis_a1n2(), θ = t1 + t2, s = s_1.
QMatrix closed_form_a1n2();
// β = 0 boundary data for D_1 on basis_a1n2(): T0 = G M0 with M0 the closed
// form at s = 0 and G the Gram matrix, stored for every ordered pair.
ZeroDegreeTable zero_degree_table_a1n2(int u_order = 0);

struct EntryDiff {
  int row = 0;
  int col = 0;
  SeriesExp exp;
  RatFunc2 expected;
  RatFunc2 computed;
  std::string str() const;
};

struct VerifyReport {
  SeriesOrders orders;
  int entries = 0;
  int matched = 0;
  // monomials compared, nonzero on at least one side; β ≠ 0 ones separately
  int coefficients = 0;
  int curve_coefficients = 0;
  std::vector<EntryDiff> mismatches;
  // entries whose β = 0 layer could only be checked partially
  std::set<std::pair<int, int>> gaps;
  bool ok() const { return mismatches.empty() && gaps.empty(); }
  std::string summary() const;
};

// Rebuilds D_1 * - on Sym^2(A_1) from the invariants and compares every
// coefficient with the closed form expanded under q = -exp(iu).
VerifyReport verify_a1n2(const SeriesOrders& orders);
VerifyReport verify_a1n2(const SeriesOrders& orders, const ZeroDegreeTable& table);

// λ(η) ↦ (-i)^age(λ) 𝔞_λ(η); i_power is the exponent of i, taken mod 4.
struct NakajimaSymbol {
  WeightedPartition lambda;
  int i_power = 0;
  int grading = 0;
  std::string str() const;
};

NakajimaSymbol l_map(const WeightedPartition& lambda, int n);
// age(λ) + Σ deg(η_i)
int grading(const WeightedPartition& lambda, int n);
// ⟨λ(η1)|λ(η2)⟩ = (-1)^age(λ) ⟨𝔞_λ(η1)|𝔞_λ(η2)⟩
int nakajima_pairing_sign(const WeightedPartition& lambda, int n);

struct EigenReport {
  Poly1 char_poly;
  bool squarefree = false;
  // true when the matrix came from truncated series rather than closed forms
  bool approximate = false;
};

EigenReport eigen_certify(const RatMatrix& m);
// Evaluates the closed forms at a rational point (q may be Gaussian); the
// characteristic polynomial must come out rational.
EigenReport eigen_certify(const QMatrix& m, const QPoint& at);
// Evaluates truncated series at (t1, t2, s, u); flagged approximate.
// Throws ShapeError if the matrix has gaps.
EigenReport eigen_certify(const OperatorMatrix& m, const BigRational& t1, const BigRational& t2,
                          const std::vector<BigRational>& s, const BigRational& u);

}  // namespace orbsym
