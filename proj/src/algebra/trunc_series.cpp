#include "orbsym/algebra/trunc_series.hpp"

namespace orbsym {

std::string exp_str(const SeriesExp& e) {
  std::string out = "u^" + std::to_string(e.empty() ? 0 : e[0]);
  for (std::size_t k = 1; k < e.size(); ++k) out += "*s" + std::to_string(k) + "^" + std::to_string(e[k]);
  return out;
}

}  // namespace orbsym
