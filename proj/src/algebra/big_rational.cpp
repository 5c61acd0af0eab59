#include "orbsym/algebra/big_rational.hpp"

#include <cctype>

#include "orbsym/errors.hpp"

namespace orbsym {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw MalformedInput("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw MalformedInput("division of a rational by zero");
  v_ /= o.v_;
  return *this;
}

BigRational BigRational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw MalformedInput("empty rational literal");
  auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw MalformedInput("malformed rational literal '" + std::string(text) + "'");
  }
  return BigRational(BigInt(strip_plus(num)), BigInt(strip_plus(den)));
}

BigRational pow(const BigRational& base, long exponent) {
  if (exponent < 0) return pow(BigRational(1) / base, -exponent);
  BigRational result(1);
  BigRational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::size_t hash_value(const BigRational& q) {
  std::size_t h = std::hash<std::string>{}(q.str());
  return h;
}

}  // namespace orbsym
