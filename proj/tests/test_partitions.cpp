#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "orbsym/errors.hpp"
#include "orbsym/partitions.hpp"

using namespace orbsym;

namespace {
Partition P(const char* s) { return Partition::parse(s); }
WeightedPartition W(const char* s) { return WeightedPartition::parse(s); }
}  // namespace

TEST_CASE("partition parsing is canonical") {
  CHECK(P("1+2+1") == P("2+1+1"));
  CHECK(P("1+2+1").str() == "2+1+1");
  CHECK(P("1^3+2").str() == "2+1+1+1");
  CHECK(P("").empty());
  CHECK(P("3+1").size() == 4);
  CHECK(P("3+1").length() == 2);
  CHECK_THROWS_AS(P("2+-1"), MalformedInput);
  CHECK_THROWS_AS(P("a"), MalformedInput);
}

TEST_CASE("weighted partition parsing") {
  WeightedPartition w = W("1(1)+2(E1)");
  CHECK(w.str() == "2(E1)+1(1)");
  CHECK(w.underlying() == P("2+1"));
  CHECK(W("2+1") == W("2(1)+1(1)"));
  CHECK(W("1(x2)").parts()[0].second == ClassLabel::fixed_pt(2));
  CHECK(W("1(w3)").parts()[0].second == ClassLabel::omega(3));
  CHECK_THROWS_AS(W("2(Q1)"), MalformedInput);
  CHECK_THROWS_AS(W("2(E1"), MalformedInput);
}

TEST_CASE("automorphism orders") {
  CHECK(aut_order(P("1+1+2")) == 2);
  CHECK(aut_order(P("3")) == 1);
  CHECK(aut_order(P("2+2+2")) == 6);
  CHECK(aut_order_weighted(W("1(1)+1(E1)")) == 1);
  CHECK(aut_order_weighted(W("1(1)+1(1)")) == 2);
  CHECK(aut_order_weighted(W("2(E1)+2(E1)+1(E1)")) == 2);
}

TEST_CASE("centralizer, cycle order, age") {
  CHECK(centralizer_order(P("2")) == 2);
  CHECK(centralizer_order(P("2+1")) == 2);
  CHECK(centralizer_order(P("1+1+1")) == 6);
  CHECK(cycle_order(P("2+3")) == 6);
  CHECK(cycle_order(Partition::ones(5)) == 1);
  CHECK(cycle_order(P("4+6")) == 12);
  CHECK(age(P("2"), 2) == 1);
  CHECK(age(Partition::ones(4), 4) == 0);
  CHECK(age(P("2+1+1+1"), 5) == 1);
  CHECK_THROWS_AS(age(P("2"), 3), ShapeError);
}

TEST_CASE("class equation and aut divides centralizer") {
  for (int n = 1; n <= 10; ++n) {
    BigInt total = 0;
    const BigInt nf = factorial(static_cast<unsigned>(n));
    for (const auto& p : all_partitions(n)) {
      CHECK(nf % centralizer_order(p) == 0);
      total += nf / centralizer_order(p);
      CHECK(centralizer_order(p) % aut_order(p) == 0);
      CHECK(p.size() == n);
    }
    CHECK(total == nf);
  }
  CHECK(all_partitions(5).size() == 7);
  CHECK(all_partitions(0).size() == 1);
}

TEST_CASE("sub-splittings") {
  auto s1 = enumerate_sub_splittings(W("1(1)+2(E1)"));
  CHECK(s1.size() == 4);
  auto s2 = enumerate_sub_splittings(W("1(1)+1(1)"));
  CHECK(s2.size() == 3);
  auto s3 = enumerate_sub_splittings(WeightedPartition());
  CHECK(s3.size() == 1);
  for (const auto& [theta, nu] : s1) CHECK(theta + nu == W("1(1)+2(E1)"));
}

TEST_CASE("splitting count is the product of multiplicity+1") {
  for (const char* text : {"2(E1)+2(E1)+1(1)+1(1)+1(E2)", "1(1)+1(1)+1(1)", "3(w1)+1(x2)+1(x2)+1(E1)"}) {
    WeightedPartition w = W(text);
    std::size_t expect = 1;
    for (const auto& [wp, m] : w.multiplicities()) expect *= static_cast<std::size_t>(m + 1);
    auto s = enumerate_sub_splittings(w);
    CHECK(s.size() == expect);
    std::set<std::pair<WeightedPartition, WeightedPartition>> distinct(s.begin(), s.end());
    CHECK(distinct.size() == expect);
  }
}

TEST_CASE("multipartitions") {
  MultiPartition a({P("1+1"), P("2")});
  MultiPartition b({P("1"), P("")});
  CHECK(a.size() == 4);
  CHECK(a.length() == 3);
  CHECK(a.contains(b));
  CHECK(a.minus(b) == MultiPartition({P("1"), P("2")}));
  CHECK(a.minus(b) + b == a);
  CHECK_FALSE(b.contains(a));
  CHECK(a.as_weighted() == W("2(x2)+1(x1)+1(x1)"));
}
