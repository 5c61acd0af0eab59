#pragma once

#include <map>
#include <ostream>
#include <vector>

#include "orbsym/algebra/numtraits.hpp"
#include "orbsym/partitions.hpp"
#include "orbsym/surface.hpp"

namespace orbsym {

// Class in the Chen-Ruan cohomology of [Sym^n(A_r)], written in the
// fixed-point basis.
class CRClass {
 public:
  using Terms = std::map<MultiPartition, RatFunc2>;

  CRClass() = default;
  CRClass(int n, int points) : n_(n), points_(points) {}
  static CRClass basis(const MultiPartition& s, const RatFunc2& c = RatFunc2(1));

  int n() const { return n_; }
  int points() const { return points_; }
  const Terms& terms() const { return terms_; }
  RatFunc2 coeff(const MultiPartition& s) const;
  void add(const MultiPartition& s, const RatFunc2& c);

  CRClass& operator+=(const CRClass& o);
  CRClass& operator*=(const RatFunc2& c);
  friend CRClass operator+(CRClass a, const CRClass& b) { return a += b; }
  friend CRClass operator*(CRClass a, const RatFunc2& c) { return a *= c; }
  friend bool operator==(const CRClass&, const CRClass&) = default;
  friend std::ostream& operator<<(std::ostream& os, const CRClass& c);

 private:
  int n_ = 0;
  int points_ = 0;
  Terms terms_;
};

// Π_k (L_k R_k)^ℓ(σ_k)
RatFunc2 t_weight(const MultiPartition& s, const TangentWeights& w);
// Π_k 1/z_{σ_k}
BigRational h_bold(const MultiPartition& s);

// Expands λ(η) in the fixed-point basis; the coefficients are α_{λ(η)}(σ̃).
CRClass expand(const WeightedPartition& lambda, const TangentWeights& w);
RatFunc2 coefficient(const WeightedPartition& lambda, const MultiPartition& s, const TangentWeights& w);

// ⟨σ̃|δ̃⟩ = δ_{σ̃δ̃} 𝐇(σ̃) t(σ̃)
RatFunc2 pairing_fixed(const MultiPartition& a, const MultiPartition& b, const TangentWeights& w);
RatFunc2 pairing(const CRClass& a, const CRClass& b, const TangentWeights& w);
// Orbifold Poincaré pairing, contracted through the fixed-point basis.
RatFunc2 pairing(const WeightedPartition& a, const WeightedPartition& b, const TangentWeights& w);
// Same value from the cycle-matching sum
// (1/Πλ_i)(1/(|Aut λ(η)||Aut ρ(ε)|)) Σ_matchings Π ∫ η_i ε_π(i).
RatFunc2 pairing_direct(const WeightedPartition& a, const WeightedPartition& b, const TangentWeights& w);

struct PairingMatrix {
  std::vector<WeightedPartition> basis;
  FuncMatrix gram;
};

PairingMatrix gram_matrix(const std::vector<WeightedPartition>& basis, const TangentWeights& w);

// dual[j] = Σ_i coeffs(i, j) basis[i] with ⟨basis[i] | dual[j]⟩ = δ_ij.
struct DualBasis {
  std::vector<WeightedPartition> basis;
  FuncMatrix coeffs;
  std::vector<CRClass> classes;
};

// Solved block by block over the underlying partitions; throws
// DegenerateBasis when a block of the Gram matrix is singular.
DualBasis dual_basis(const std::vector<WeightedPartition>& basis, const TangentWeights& w);

}  // namespace orbsym
