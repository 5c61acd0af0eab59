#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbsym/errors.hpp"
#include "orbsym/io.hpp"

using namespace orbsym;

TEST_CASE("series JSON round trip") {
  const auto w = tangent_weights(1);
  Series s = two_point_series(WeightedPartition::parse("1(E1)+2(E1)"), WeightedPartition::parse("1(E1)+2(E1)"),
                              SeriesOrders{1, {3}}, w);
  REQUIRE_FALSE(s.is_zero());
  const std::string text = series_to_json(s);
  CHECK(series_from_json(text) == s);
  // printing is byte-stable
  CHECK(series_to_json(series_from_json(text)) == text);

  Series empty(SeriesOrders{2, {1, 1}});
  CHECK(series_from_json(series_to_json(empty)) == empty);
}

TEST_CASE("operator matrix JSON round trip") {
  const auto orders = SeriesOrders{1, {2}};
  OperatorMatrix full = divisor_operator(2, 1, DivisorSymbol::untwisted(1), basis_a1n2(), orders, tangent_weights(1),
                                         zero_degree_table_a1n2(1));
  CHECK(full.gaps.empty());
  CHECK(operator_from_json(operator_to_json(full)) == full);

  OperatorMatrix gappy = divisor_operator(2, 1, DivisorSymbol::twisted(), basis_a1n2(), orders, tangent_weights(1),
                                          ZeroDegreeTable());
  OperatorMatrix back = operator_from_json(operator_to_json(gappy));
  CHECK(back == gappy);
  CHECK(back.gaps.size() == gappy.gaps.size());
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(series_from_json("{"), MalformedInput);
  CHECK_THROWS_AS(series_from_json(R"({"orders": {"u": 0, "s": [1]}, "terms": [[[0, 5], "1"]]})"), MalformedInput);
  CHECK_THROWS_AS(series_from_json(R"({"orders": {"u": 0}, "terms": []})"), MalformedInput);
  CHECK_THROWS_AS(operator_from_json(R"({"basis": []})"), MalformedInput);
}

TEST_CASE("CSV and LaTeX emitters") {
  OperatorMatrix op = divisor_operator(2, 1, DivisorSymbol::untwisted(1), basis_a1n2(), SeriesOrders{0, {1}},
                                       tangent_weights(1), zero_degree_table_a1n2());
  const std::string csv = operator_to_csv(op);
  CHECK(csv.starts_with("row,col,a,d1,value\n"));
  CHECK(csv.find("2,2,0,1,\"-4*t1 - 4*t2\"") != std::string::npos);

  const std::string tex = operator_to_latex(op);
  CHECK(tex.find("\\begin{matrix}") != std::string::npos);
  CHECK(tex.find("+ ?") == std::string::npos);

  const std::string closed = qmatrix_to_latex(closed_form_a1n2());
  CHECK(closed.find("\\frac{2}{1 - s_{1}}") != std::string::npos);
  CHECK(ratfunc_latex(RatFunc2::parse("1/(2*t1*t2)")) == "\\frac{1}{2t_1t_2}");
}
