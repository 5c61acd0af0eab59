#pragma once

#include <string>
#include <string_view>

#include "orbsym/operators.hpp"

namespace orbsym {

// {"orders": {"u": A, "s": [D1, ...]}, "terms": [[[a, d1, ...], "num/den"], ...]}
std::string series_to_json(const Series& s);
Series series_from_json(std::string_view text);

// {"basis": [...], "divisor": "D1", "orders": {...}, "entries": [[series, ...], ...], "gaps": [[i, j], ...]}
std::string operator_to_json(const OperatorMatrix& m);
OperatorMatrix operator_from_json(std::string_view text);

// One row per stored coefficient: row,col,a,d1..dr,value (1-based row/col).
std::string operator_to_csv(const OperatorMatrix& m);
std::string operator_to_latex(const OperatorMatrix& m);
std::string qmatrix_to_latex(const QMatrix& m);

std::string ratfunc_latex(const RatFunc2& f);

}  // namespace orbsym
