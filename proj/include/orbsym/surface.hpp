#pragma once

#include <vector>

#include "orbsym/algebra/numtraits.hpp"
#include "orbsym/algebra/ratfunc2.hpp"
#include "orbsym/partitions.hpp"

namespace orbsym {

// Torus weights (L_k, R_k) of the tangent space at the fixed point x_k of
// the A_r resolution, k = 1..r+1 (stored 0-based).
struct TangentWeights {
  int r = 0;
  std::vector<Poly2> L;
  std::vector<Poly2> R;

  int points() const { return r + 1; }
  // L_k R_k, the equivariant Euler class of T_{x_k}; k is 1-based.
  Poly2 euler(int k) const { return L.at(static_cast<std::size_t>(k - 1)) * R.at(static_cast<std::size_t>(k - 1)); }
};

TangentWeights tangent_weights(int r);

// Equivariant class on A_r recorded by its restrictions to x_1..x_{r+1}.
class SurfaceClass {
 public:
  SurfaceClass() = default;
  explicit SurfaceClass(std::vector<RatFunc2> coords) : coords_(std::move(coords)) {}
  static SurfaceClass zero(int points) { return SurfaceClass(std::vector<RatFunc2>(static_cast<std::size_t>(points))); }

  int points() const { return static_cast<int>(coords_.size()); }
  const std::vector<RatFunc2>& coords() const { return coords_; }
  // Restriction to x_k, k 1-based.
  const RatFunc2& at(int k) const { return coords_.at(static_cast<std::size_t>(k - 1)); }

  SurfaceClass& operator+=(const SurfaceClass& o);
  SurfaceClass& operator*=(const RatFunc2& c);
  friend SurfaceClass operator+(SurfaceClass a, const SurfaceClass& b) { return a += b; }
  friend SurfaceClass operator*(SurfaceClass a, const RatFunc2& c) { return a *= c; }
  // Cup product is pointwise on restrictions.
  friend SurfaceClass operator*(const SurfaceClass& a, const SurfaceClass& b);
  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;

 private:
  std::vector<RatFunc2> coords_;
};

// Curve class Σ d_i E_i.
struct CurveClass {
  std::vector<int> d;

  // d (E_i + ... + E_j) in rank r.
  static CurveClass chain(int r, int i, int j, int mult);
  bool is_zero() const;
  // If the class is d E_ij with d > 0, returns true and fills i, j, d.
  bool as_chain(int& i, int& j, int& mult) const;
};

SurfaceClass class_of(const ClassLabel& label, const TangentWeights& w);

// Σ_k α_k β_k / (L_k R_k)
RatFunc2 integrate(const SurfaceClass& a, const SurfaceClass& b, const TangentWeights& w);
RatFunc2 integrate(const SurfaceClass& a, const TangentWeights& w);

// Coefficients of β on E_1..E_r, which are the exponents of s_1..s_r.
std::vector<int> curve_exponents(const CurveClass& beta);

// The r x r matrix of E_i . E_j: -2 on the diagonal, 1 next to it.
RatMatrix intersection_matrix(int r);
// Localized Gram matrix ∫ E_i E_j.
FuncMatrix ecurve_gram(const TangentWeights& w);

// E_ij . γ for γ = 1, E_m or ω_m. Throws UnsupportedWeight for other labels.
BigRational e_dot(const ClassLabel& gamma, int i, int j, int r);

}  // namespace orbsym
