#include "orbsym/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "orbsym/errors.hpp"

namespace orbsym {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

int parse_positive(std::string_view text, std::string_view context) {
  std::string t = trim(text);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }) || t.size() > 6) {
    throw MalformedInput("expected a positive integer in '" + std::string(context) + "', got '" + t + "'");
  }
  int v = std::stoi(t);
  if (v <= 0) throw MalformedInput("expected a positive integer in '" + std::string(context) + "', got '" + t + "'");
  return v;
}

std::vector<std::string> split_plus(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k < text.size() && text[k] == '(') ++depth;
    if (k < text.size() && text[k] == ')') --depth;
    if (k == text.size() || (text[k] == '+' && depth == 0)) {
      out.push_back(trim(text.substr(start, k - start)));
      start = k + 1;
    }
  }
  return out;
}

bool weighted_less(const WeightedPart& a, const WeightedPart& b) {
  if (a.first != b.first) return a.first > b.first;
  return a.second < b.second;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw MalformedInput("partition parts must be positive, got " + std::to_string(p));
    size_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
  std::string t = trim(text);
  if (t.empty() || t == "0") return Partition();
  std::vector<int> parts;
  for (const auto& piece : split_plus(t)) {
    // allow exponent shorthand "1^3"
    auto caret = piece.find('^');
    if (caret == std::string::npos) {
      parts.push_back(parse_positive(piece, text));
    } else {
      int part = parse_positive(std::string_view(piece).substr(0, caret), text);
      int times = parse_positive(std::string_view(piece).substr(caret + 1), text);
      parts.insert(parts.end(), static_cast<std::size_t>(times), part);
    }
  }
  return Partition(std::move(parts));
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

std::string Partition::str() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += "+";
    out += std::to_string(parts_[k]);
  }
  return out;
}

ClassLabel ClassLabel::general(std::shared_ptr<const SurfaceClass> cls, std::string name, int degree) {
  if (name.empty()) throw MalformedInput("general class labels need a name");
  ClassLabel l(Kind::General, 0);
  l.general_ = std::move(cls);
  l.name_ = std::move(name);
  l.general_degree_ = degree;
  return l;
}

ClassLabel ClassLabel::parse(std::string_view text) {
  std::string t = trim(text);
  if (t == "1") return one();
  if (t.size() >= 2) {
    const std::string_view rest = std::string_view(t).substr(1);
    switch (t[0]) {
      case 'E':
        return ecurve(parse_positive(rest, text));
      case 'w':
        return omega(parse_positive(rest, text));
      case 'x':
        return fixed_pt(parse_positive(rest, text));
      default:
        break;
    }
  }
  throw MalformedInput("unknown class label '" + t + "' (expected 1, E<i>, w<i> or x<k>)");
}

int ClassLabel::degree() const {
  switch (kind_) {
    case Kind::One:
      return 0;
    case Kind::ECurve:
    case Kind::Omega:
      return 1;
    case Kind::FixedPt:
      return 2;
    case Kind::General:
      return general_degree_;
  }
  return 0;
}

std::string ClassLabel::str() const {
  switch (kind_) {
    case Kind::One:
      return "1";
    case Kind::ECurve:
      return "E" + std::to_string(index_);
    case Kind::Omega:
      return "w" + std::to_string(index_);
    case Kind::FixedPt:
      return "x" + std::to_string(index_);
    case Kind::General:
      return name_;
  }
  return "?";
}

WeightedPartition::WeightedPartition(std::vector<WeightedPart> parts) : parts_(std::move(parts)) {
  for (const auto& [p, l] : parts_) {
    if (p <= 0) throw MalformedInput("weighted partition parts must be positive, got " + std::to_string(p));
  }
  std::sort(parts_.begin(), parts_.end(), weighted_less);
}

WeightedPartition WeightedPartition::parse(std::string_view text) {
  std::string t = trim(text);
  if (t.empty() || t == "0") return WeightedPartition();
  std::vector<WeightedPart> parts;
  for (const auto& piece : split_plus(t)) {
    auto open = piece.find('(');
    if (open == std::string::npos) {
      parts.emplace_back(parse_positive(piece, text), ClassLabel::one());
      continue;
    }
    if (piece.back() != ')') throw MalformedInput("missing ')' in weighted partition '" + std::string(text) + "'");
    int part = parse_positive(std::string_view(piece).substr(0, open), text);
    ClassLabel label = ClassLabel::parse(std::string_view(piece).substr(open + 1, piece.size() - open - 2));
    parts.emplace_back(part, label);
  }
  return WeightedPartition(std::move(parts));
}

WeightedPartition WeightedPartition::uniform(const Partition& p, const ClassLabel& l) {
  std::vector<WeightedPart> parts;
  for (int x : p.parts()) parts.emplace_back(x, l);
  return WeightedPartition(std::move(parts));
}

int WeightedPartition::size() const {
  int s = 0;
  for (const auto& wp : parts_) s += wp.first;
  return s;
}

Partition WeightedPartition::underlying() const {
  std::vector<int> p;
  for (const auto& wp : parts_) p.push_back(wp.first);
  return Partition(std::move(p));
}

std::map<WeightedPart, int> WeightedPartition::multiplicities() const {
  std::map<WeightedPart, int> m;
  for (const auto& wp : parts_) ++m[wp];
  return m;
}

std::string WeightedPartition::str() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += "+";
    out += std::to_string(parts_[k].first) + "(" + parts_[k].second.str() + ")";
  }
  return out;
}

WeightedPartition operator+(const WeightedPartition& a, const WeightedPartition& b) {
  std::vector<WeightedPart> parts = a.parts_;
  parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
  return WeightedPartition(std::move(parts));
}

int MultiPartition::size() const {
  int s = 0;
  for (const auto& p : comps_) s += p.size();
  return s;
}

int MultiPartition::length() const {
  int s = 0;
  for (const auto& p : comps_) s += p.length();
  return s;
}

WeightedPartition MultiPartition::as_weighted() const {
  std::vector<WeightedPart> parts;
  for (std::size_t k = 0; k < comps_.size(); ++k) {
    for (int p : comps_[k].parts()) parts.emplace_back(p, ClassLabel::fixed_pt(static_cast<int>(k) + 1));
  }
  return WeightedPartition(std::move(parts));
}

MultiPartition operator+(const MultiPartition& a, const MultiPartition& b) {
  if (a.points() != b.points()) throw ShapeError("fixed-point classes over different numbers of points");
  std::vector<Partition> out;
  for (std::size_t k = 0; k < a.comps_.size(); ++k) {
    std::vector<int> parts = a.comps_[k].parts();
    parts.insert(parts.end(), b.comps_[k].parts().begin(), b.comps_[k].parts().end());
    out.emplace_back(std::move(parts));
  }
  return MultiPartition(std::move(out));
}

bool MultiPartition::contains(const MultiPartition& sub) const {
  if (points() != sub.points()) return false;
  for (std::size_t k = 0; k < comps_.size(); ++k) {
    auto mine = comps_[k].multiplicities();
    for (const auto& [p, m] : sub.comps_[k].multiplicities()) {
      if (mine[p] < m) return false;
    }
  }
  return true;
}

MultiPartition MultiPartition::minus(const MultiPartition& sub) const {
  if (!contains(sub)) throw ShapeError("'" + sub.str() + "' is not contained in '" + str() + "'");
  std::vector<Partition> out;
  for (std::size_t k = 0; k < comps_.size(); ++k) {
    auto m = comps_[k].multiplicities();
    for (const auto& [p, c] : sub.comps_[k].multiplicities()) m[p] -= c;
    std::vector<int> parts;
    for (const auto& [p, c] : m) parts.insert(parts.end(), static_cast<std::size_t>(c), p);
    out.emplace_back(std::move(parts));
  }
  return MultiPartition(std::move(out));
}

std::string MultiPartition::str() const {
  std::string out = "[";
  for (std::size_t k = 0; k < comps_.size(); ++k) {
    if (k) out += " | ";
    out += comps_[k].empty() ? "-" : comps_[k].str();
  }
  return out + "]";
}

BigInt aut_order(const Partition& p) {
  BigInt r = 1;
  for (const auto& [part, m] : p.multiplicities()) r *= factorial(static_cast<unsigned>(m));
  return r;
}

BigInt aut_order_weighted(const WeightedPartition& p) {
  BigInt r = 1;
  for (const auto& [wp, m] : p.multiplicities()) r *= factorial(static_cast<unsigned>(m));
  return r;
}

BigInt centralizer_order(const Partition& p) {
  BigInt r = 1;
  for (const auto& [part, m] : p.multiplicities()) {
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
    r *= pw * factorial(static_cast<unsigned>(m));
  }
  return r;
}

BigInt cycle_order(const Partition& p) {
  BigInt r = 1;
  for (int part : p.parts()) r = lcm(r, BigInt(part));
  return r;
}

int age(const Partition& p, int n) {
  if (p.size() != n) {
    throw ShapeError("age of " + p.str() + " requested for n = " + std::to_string(n) + " but |λ| = " +
                     std::to_string(p.size()));
  }
  return n - p.length();
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<WeightedPartition> all_weighted_partitions(int n, const std::vector<ClassLabel>& labels) {
  std::vector<WeightedPartition> out;
  for (const auto& p : all_partitions(n)) {
    // For each distinct part, choose a multiset of labels of the right size.
    std::vector<std::vector<WeightedPart>> partial{{}};
    for (const auto& [part, mult] : p.multiplicities()) {
      std::vector<std::vector<WeightedPart>> next;
      std::vector<std::size_t> pick;
      std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(pick.size()) == mult) {
          for (const auto& base : partial) {
            auto v = base;
            for (std::size_t k : pick) v.emplace_back(part, labels[k]);
            next.push_back(std::move(v));
          }
          return;
        }
        for (std::size_t k = from; k < labels.size(); ++k) {
          pick.push_back(k);
          rec(k);
          pick.pop_back();
        }
      };
      rec(0);
      partial = std::move(next);
    }
    for (auto& v : partial) out.emplace_back(std::move(v));
  }
  return out;
}

std::vector<ClassLabel> labels_for_rank(int r) {
  std::vector<ClassLabel> out{ClassLabel::one()};
  for (int i = 1; i <= r; ++i) out.push_back(ClassLabel::ecurve(i));
  for (int i = 1; i <= r; ++i) out.push_back(ClassLabel::omega(i));
  for (int k = 1; k <= r + 1; ++k) out.push_back(ClassLabel::fixed_pt(k));
  return out;
}

std::vector<std::pair<WeightedPartition, WeightedPartition>> enumerate_sub_splittings(const WeightedPartition& p) {
  const auto mult = p.multiplicities();
  std::vector<std::pair<WeightedPart, int>> distinct(mult.begin(), mult.end());
  std::vector<std::pair<WeightedPartition, WeightedPartition>> out;
  std::vector<int> take(distinct.size(), 0);
  for (;;) {
    std::vector<WeightedPart> theta, nu;
    for (std::size_t k = 0; k < distinct.size(); ++k) {
      theta.insert(theta.end(), static_cast<std::size_t>(take[k]), distinct[k].first);
      nu.insert(nu.end(), static_cast<std::size_t>(distinct[k].second - take[k]), distinct[k].first);
    }
    out.emplace_back(WeightedPartition(std::move(theta)), WeightedPartition(std::move(nu)));
    // odometer over take[k] in 0..multiplicity
    std::size_t k = 0;
    while (k < distinct.size() && take[k] == distinct[k].second) take[k++] = 0;
    if (k == distinct.size()) break;
    ++take[k];
  }
  return out;
}

}  // namespace orbsym
