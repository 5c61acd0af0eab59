#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orbsym/chenruan.hpp"
#include "orbsym/errors.hpp"

using namespace orbsym;

namespace {
RatFunc2 rf(const char* s) { return RatFunc2::parse(s); }
WeightedPartition W(const char* s) { return WeightedPartition::parse(s); }
Partition P(const char* s) { return Partition::parse(s); }
MultiPartition M(std::initializer_list<const char*> comps) {
  std::vector<Partition> v;
  for (const char* c : comps) v.push_back(P(c));
  return MultiPartition(v);
}
}  // namespace

TEST_CASE("tangent weight of fixed-point classes") {
  auto w = tangent_weights(1);
  CHECK(t_weight(M({"1", "1"}), w) == rf("(2*t1*(t2-t1))*((t1-t2)*2*t2)"));
  auto w2 = tangent_weights(2);
  MultiPartition d = M({"2+1", "1", "3"});
  MultiPartition s = M({"1", "", "3"});
  CHECK(t_weight(d, w2) == t_weight(s, w2) * t_weight(d.minus(s), w2));
  // t ≡ τ^ℓ mod (t1 + t2) with τ = -(r+1)^2 t1^2
  Poly2 tau = Poly2(-9) * Poly2::t1() * Poly2::t1();
  Poly2 diff = t_weight(d, w2).num() - pow(tau, static_cast<unsigned>(d.length()));
  CHECK(try_divide(diff, Poly2::t1() + Poly2::t2()).has_value());
}

TEST_CASE("expansion in the fixed-point basis") {
  auto w = tangent_weights(1);
  CRClass one = expand(W("1(1)"), w);
  CHECK(one.coeff(M({"1", ""})) == RatFunc2(1) / RatFunc2(w.euler(1)));
  CHECK(one.coeff(M({"", "1"})) == RatFunc2(1) / RatFunc2(w.euler(2)));
  CRClass two = expand(W("1(1)+1(1)"), w);
  CHECK(two.coeff(M({"1+1", ""})) == RatFunc2(1) / RatFunc2(w.euler(1) * w.euler(1)));
  CHECK(two.coeff(M({"1", "1"})) == RatFunc2(1) / RatFunc2(w.euler(1) * w.euler(2)));
  CRClass fixed = expand(W("2(x1)"), w);
  CHECK(fixed == CRClass::basis(M({"2", ""})));
  CHECK(coefficient(W("2(E1)"), M({"2", ""}), w) == rf("1/(t2-t1)"));
}

TEST_CASE("fixed-point pairing") {
  auto w = tangent_weights(1);
  CHECK(pairing_fixed(M({"1+1", ""}), M({"1+1", ""}), w) == rf("(2*t1*(t2-t1))^2/2"));
  CHECK(pairing_fixed(M({"1+1", ""}), M({"1", "1"}), w).is_zero());
  CHECK(pairing_fixed(M({"2", ""}), M({"2", ""}), w) == RatFunc2(w.euler(1)) / RatFunc2(2));
  CHECK_THROWS_AS(pairing_fixed(M({"2", ""}), M({"1", ""}), w), ShapeError);
}

TEST_CASE("pairing examples") {
  auto w = tangent_weights(1);
  CHECK(pairing(W("2(E1)"), W("2(E1)"), w) == RatFunc2(-1));
  CHECK(pairing(W("2(1)"), W("2(1)"), w) == rf("1/(4*t1*t2)"));
  CHECK(pairing(W("2(E1)"), W("1(1)+1(1)"), w).is_zero());
  CHECK(pairing(W("1(1)+1(E1)"), W("1(1)+1(E1)"), w) == rf("-1/(t1*t2)"));
  CHECK(pairing(W("1(1)+1(1)"), W("1(1)+1(1)"), w) == rf("1/(8*t1^2*t2^2)"));
  CHECK(pairing(W("1(E1)+1(E1)"), W("1(E1)+1(E1)"), w) == RatFunc2(2));
}

TEST_CASE("direct and fixed-basis pairings agree for n <= 3, r <= 2") {
  for (int r = 1; r <= 2; ++r) {
    auto w = tangent_weights(r);
    for (int n = 1; n <= 3; ++n) {
      auto all = all_weighted_partitions(n, labels_for_rank(r));
      std::vector<CRClass> ex;
      for (const auto& x : all) ex.push_back(expand(x, w));
      for (std::size_t a = 0; a < all.size(); ++a) {
        for (std::size_t b = a; b < all.size(); ++b) {
          if (!(all[a].underlying() == all[b].underlying())) continue;
          RatFunc2 fixed = pairing(ex[a], ex[b], w);
          CHECK(fixed == pairing_direct(all[a], all[b], w));
          if (b == a + 1) CHECK(fixed == pairing(ex[b], ex[a], w));
        }
      }
    }
  }
}

TEST_CASE("direct pairing on fixed-point classes gives H t") {
  auto w = tangent_weights(2);
  for (const auto& s : {M({"1+1", "", "1"}), M({"2", "1", ""}), M({"", "", "3"}), M({"1", "1", "1"})}) {
    WeightedPartition x = s.as_weighted();
    CHECK(pairing_direct(x, x, w) == RatFunc2(h_bold(s)) * t_weight(s, w));
  }
}

TEST_CASE("splitting identity") {
  std::mt19937 rng(21);
  for (int r = 1; r <= 2; ++r) {
    auto w = tangent_weights(r);
    auto labels = labels_for_rank(r);
    for (int n = 2; n <= 3; ++n) {
      auto all = all_weighted_partitions(n, labels);
      for (int trial = 0; trial < 15; ++trial) {
        const auto& lambda = all[rng() % all.size()];
        CRClass ex = expand(lambda, w);
        if (ex.terms().empty()) continue;
        auto it = ex.terms().begin();
        std::advance(it, static_cast<long>(rng() % ex.terms().size()));
        const MultiPartition& delta = it->first;
        // pick a single-cycle sub-class of delta
        for (std::size_t k = 0; k < delta.components().size(); ++k) {
          if (delta[k].empty()) continue;
          std::vector<Partition> sc(delta.components().size());
          sc[k] = Partition({delta[k].parts()[0]});
          MultiPartition sigma(sc);
          RatFunc2 sum;
          for (const auto& [theta, mu] : enumerate_sub_splittings(lambda)) {
            if (theta.size() != sigma.size()) continue;
            sum += coefficient(theta, sigma, w) * coefficient(mu, delta.minus(sigma), w);
          }
          CHECK(sum == coefficient(lambda, delta, w));
          break;
        }
      }
    }
  }
}

TEST_CASE("dual basis") {
  auto w = tangent_weights(1);
  std::vector<WeightedPartition> basis{W("2(E1)"), W("2(1)")};
  DualBasis d = dual_basis(basis, w);
  CHECK(d.coeffs(0, 0) == RatFunc2(-1));
  CHECK(d.coeffs(1, 0).is_zero());
  CHECK(d.classes[0] == expand(W("2(E1)"), w) * RatFunc2(-1));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      CHECK(pairing(expand(basis[i], w), d.classes[j], w) == RatFunc2(i == j ? 1 : 0));
    }
  }
  std::vector<WeightedPartition> fixed{W("1(x1)+1(x2)")};
  DualBasis df = dual_basis(fixed, w);
  MultiPartition s = M({"1", "1"});
  CHECK(df.classes[0] == CRClass::basis(s, RatFunc2(1) / (RatFunc2(h_bold(s)) * t_weight(s, w))));

  std::vector<WeightedPartition> bad{W("2(E1)"), W("2(E1)")};
  CHECK_THROWS_AS(dual_basis(bad, w), DegenerateBasis);

  std::vector<WeightedPartition> five{W("1(E1)+1(E1)"), W("2(E1)"), W("1(1)+1(E1)"), W("2(1)"), W("1(1)+1(1)")};
  PairingMatrix g = gram_matrix(five, w);
  CHECK(g.gram(0, 0) == RatFunc2(2));
  CHECK(g.gram(1, 1) == RatFunc2(-1));
  CHECK(g.gram(2, 2) == rf("-1/(t1*t2)"));
  CHECK(g.gram(3, 3) == rf("1/(4*t1*t2)"));
  CHECK(g.gram(4, 4) == rf("1/(8*t1^2*t2^2)"));
  CHECK(g.gram(0, 2).is_zero());
  CHECK(g.gram(0, 4).is_zero());
  CHECK(g.gram(2, 4).is_zero());
}
