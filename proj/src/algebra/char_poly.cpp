#include "orbsym/algebra/char_poly.hpp"

namespace orbsym {

Poly1 char_poly(const Mat<BigRational>& m) { return Poly1(char_poly_coeffs(m)); }

Poly1 char_poly(const Mat<GaussRational>& m) {
  std::vector<GaussRational> c = char_poly_coeffs(m);
  std::vector<BigRational> re;
  re.reserve(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!c[k].is_real()) {
      throw RealnessViolation("characteristic polynomial has imaginary coefficient at x^" + std::to_string(k));
    }
    re.push_back(c[k].re);
  }
  return Poly1(std::move(re));
}

bool is_squarefree(const Poly1& p) { return gcd(p, p.derivative()).is_constant(); }

std::pair<Poly1, bool> char_poly_squarefree(const Mat<BigRational>& m) {
  Poly1 p = char_poly(m);
  return {p, is_squarefree(p)};
}

std::pair<Poly1, bool> char_poly_squarefree(const Mat<GaussRational>& m) {
  Poly1 p = char_poly(m);
  return {p, is_squarefree(p)};
}

}  // namespace orbsym
