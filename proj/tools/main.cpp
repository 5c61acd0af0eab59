// orbsym: command-line front end.
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
// 3 resource budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbsym/errors.hpp"
#include "orbsym/hurwitz.hpp"
#include "orbsym/io.hpp"
#include "orbsym/operators.hpp"

using namespace orbsym;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

// Input errors carry the flag that produced them.
class FlagError : public Error {
 public:
  FlagError(const std::string& flag, const std::string& what) : Error(flag + ": " + what) {}
};

template <class F>
auto with_flag(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ResourceError&) {
    throw;
  } catch (const Error& e) {
    throw FlagError(flag, e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

void check_labels(const WeightedPartition& p, int r, const std::string& flag) {
  for (const auto& [part, l] : p.parts()) {
    const int limit = l.kind() == ClassLabel::Kind::FixedPt ? r + 1 : r;
    if (l.kind() != ClassLabel::Kind::One && (l.index() < 1 || l.index() > limit)) {
      throw FlagError(flag, "label " + l.str() + " is out of range for r = " + std::to_string(r));
    }
  }
}

SeriesOrders make_orders(int u_order, const std::string& s_text, int r) {
  if (u_order < 0) throw FlagError("--u-order", "must be >= 0");
  std::vector<int> s;
  for (const auto& piece : split(s_text, ',')) {
    s.push_back(with_flag("--s-order", [&] {
      try {
        std::size_t used = 0;
        int v = std::stoi(piece, &used);
        if (used != piece.size() || v < 0) throw MalformedInput("'" + piece + "' is not a nonnegative integer");
        return v;
      } catch (const std::logic_error&) {
        throw MalformedInput("'" + piece + "' is not a nonnegative integer");
      }
    }));
  }
  if (s.size() == 1 && r > 1) s.assign(static_cast<std::size_t>(r), s[0]);
  if (static_cast<int>(s.size()) != r) {
    throw FlagError("--s-order", "expected 1 or " + std::to_string(r) + " values, got " + std::to_string(s.size()));
  }
  return SeriesOrders{u_order, s};
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw FlagError("--output", "cannot write '" + path + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << "\n";
}

// Turns {"command": "...", "key": value, ...} into argv-style tokens.
std::vector<std::string> config_tokens(const std::string& path, bool& has_command) {
  std::ifstream in(path);
  if (!in) throw FlagError("--config", "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FlagError("--config", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw FlagError("--config", "top level must be an object");
  std::vector<std::string> out;
  has_command = j.contains("command");
  if (has_command) out.push_back(j.at("command").get<std::string>());
  auto scalar = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (const auto& [k, v] : j.items()) {
    if (k == "command") continue;
    const std::string flag = "--" + k;
    if (v.is_boolean()) {
      if (v.get<bool>()) out.push_back(flag);
    } else if (v.is_array()) {
      for (const auto& x : v) {
        out.push_back(flag);
        out.push_back(scalar(x));
      }
    } else {
      out.push_back(flag);
      out.push_back(scalar(v));
    }
  }
  return out;
}

struct HurwitzOpts {
  int n = 0;
  std::string profiles;
  std::string backend = "brute";
  bool gjv = false;
  std::string sigma;
  int k = 0;
  int b = 0;
};

int run_hurwitz(const HurwitzOpts& o) {
  if (o.gjv || o.backend == "gjv") {
    if (o.sigma.empty()) throw FlagError("--sigma", "required with --gjv");
    const Partition sigma = with_flag("--sigma", [&] { return Partition::parse(o.sigma); });
    if (o.k != 0 && o.k != sigma.size()) throw FlagError("--k", "sigma has size " + std::to_string(sigma.size()));
    if (o.b < 0) throw FlagError("--b", "must be >= 0");
    std::cout << one_part_double_hurwitz(sigma, o.b) << "\n";
    return kOk;
  }
  if (o.n < 1) throw FlagError("--n", "must be >= 1");
  HurwitzQuery q{o.n, {}};
  if (!o.profiles.empty()) {
    for (const auto& piece : split(o.profiles, ';')) {
      Partition p = with_flag("--profiles", [&] { return Partition::parse(piece); });
      if (p.size() != o.n) throw FlagError("--profiles", "profile '" + piece + "' is not a partition of " + std::to_string(o.n));
      q.profiles.push_back(p);
    }
  }
  BigRational v = o.backend == "fast" ? hurwitz_fast(q) : hurwitz(q);
  std::cout << v << "\n";
  return kOk;
}

struct TwoPointOpts {
  std::string left;
  std::string right;
  int n = 0;
  int r = 1;
  int u_order = 0;
  std::string s_order = "3";
  std::string format = "json";
  std::string output;
};

int run_two_point(const TwoPointOpts& o) {
  if (o.r < 1) throw FlagError("--r", "must be >= 1");
  const auto a = with_flag("--left", [&] { return WeightedPartition::parse(o.left); });
  const auto b = with_flag("--right", [&] { return WeightedPartition::parse(o.right); });
  check_labels(a, o.r, "--left");
  check_labels(b, o.r, "--right");
  if (a.size() != b.size()) throw FlagError("--right", "size " + std::to_string(b.size()) + " differs from --left size " + std::to_string(a.size()));
  if (o.n != 0 && o.n != a.size()) throw FlagError("--n", "the weighted partitions have size " + std::to_string(a.size()));
  const SeriesOrders orders = make_orders(o.u_order, o.s_order, o.r);
  const Series s = with_flag("--left", [&] { return two_point_series(a, b, orders, tangent_weights(o.r)); });
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["left"] = a.str();
    j["right"] = b.str();
    j["n"] = a.size();
    j["r"] = o.r;
    j["series"] = nlohmann::ordered_json::parse(series_to_json(s));
    emit(j.dump(2), o.output);
  } else {
    OperatorMatrix one{{a}, DivisorSymbol::identity(), orders, {{s}}, {}};
    emit(o.format == "csv" ? operator_to_csv(one) : operator_to_latex(one), o.output);
  }
  return kOk;
}

struct OpMatrixOpts {
  int n = 2;
  int r = 1;
  std::string divisor = "D1";
  std::vector<std::string> basis;
  int u_order = 2;
  std::string s_order = "2";
  std::string table;
  std::string format = "json";
  std::string output;
  bool closed_form = false;
};

int run_op_matrix(const OpMatrixOpts& o) {
  if (o.n < 1) throw FlagError("--n", "must be >= 1");
  if (o.r < 1) throw FlagError("--r", "must be >= 1");
  const DivisorSymbol d = with_flag("--divisor", [&] { return DivisorSymbol::parse(o.divisor); });
  if (d.kind == DivisorSymbol::Kind::Identity) throw FlagError("--divisor", "expected (2) or D<l>");
  if (d.kind == DivisorSymbol::Kind::Untwisted && d.index > o.r) throw FlagError("--divisor", "index exceeds r");
  if (o.closed_form) {
    if (o.n != 2 || o.r != 1 || d.kind != DivisorSymbol::Kind::Untwisted || !o.basis.empty()) {
      throw FlagError("--closed-form", "only available for D1 on n = 2, r = 1 in the default basis");
    }
    if (o.format != "latex") throw FlagError("--closed-form", "needs --format latex");
    emit(qmatrix_to_latex(closed_form_a1n2()), o.output);
    return kOk;
  }
  std::vector<WeightedPartition> basis;
  for (const auto& b : o.basis) {
    basis.push_back(with_flag("--basis", [&] { return WeightedPartition::parse(b); }));
    check_labels(basis.back(), o.r, "--basis");
  }
  if (basis.empty()) {
    if (o.n == 2 && o.r == 1) {
      basis = basis_a1n2();
    } else {
      std::vector<ClassLabel> labels;
      for (const auto& l : labels_for_rank(o.r)) {
        if (l.kind() == ClassLabel::Kind::One || l.kind() == ClassLabel::Kind::ECurve) labels.push_back(l);
      }
      basis = all_weighted_partitions(o.n, labels);
    }
  }
  ZeroDegreeTable table;
  if (!o.table.empty()) table = with_flag("--table", [&] { return ZeroDegreeTable::load(o.table); });
  const SeriesOrders orders = make_orders(o.u_order, o.s_order, o.r);
  const OperatorMatrix m = with_flag("--basis", [&] {
    return divisor_operator(o.n, o.r, d, basis, orders, tangent_weights(o.r), table);
  });
  std::string text;
  if (o.format == "json") {
    text = operator_to_json(m);
  } else if (o.format == "latex") {
    text = operator_to_latex(m);
  } else {
    text = operator_to_csv(m);
  }
  emit(text, o.output);
  if (!m.gaps.empty()) std::cerr << m.gaps.size() << " entries lack degree-zero data (see \"gaps\")\n";
  return kOk;
}

struct VerifyOpts {
  int u_order = 6;
  int s_order = 6;
  std::string table;
  std::string write_table;
  bool latex = false;
};

int run_verify(const VerifyOpts& o) {
  if (o.u_order < 0) throw FlagError("--u-order", "must be >= 0");
  if (o.s_order < 0) throw FlagError("--s-order", "must be >= 0");
  if (!o.write_table.empty()) {
    zero_degree_table_a1n2(o.u_order).save(o.write_table);
    std::cerr << "wrote " << o.write_table << "\n";
  }
  if (o.latex) std::cout << qmatrix_to_latex(closed_form_a1n2());
  const SeriesOrders orders{o.u_order, {o.s_order}};
  const VerifyReport rep = o.table.empty()
                               ? verify_a1n2(orders)
                               : verify_a1n2(orders, with_flag("--table", [&] { return ZeroDegreeTable::load(o.table); }));
  std::cout << rep.summary() << "\n";
  for (const auto& m : rep.mismatches) std::cout << "mismatch: " << m.str() << "\n";
  for (const auto& [i, j] : rep.gaps) std::cout << "gap: entry (" << i + 1 << "," << j + 1 << ")\n";
  return rep.ok() ? kOk : kMismatch;
}

struct EigenOpts {
  std::string t1 = "1";
  std::string t2 = "2";
  std::string s = "1/3";
  std::string q = "1/5";
  bool identity = false;
};

int run_eigencheck(const EigenOpts& o) {
  EigenReport rep;
  bool expect_squarefree = true;
  if (o.identity) {
    rep = eigen_certify(RatMatrix::Identity(5, 5));
    expect_squarefree = false;
  } else {
    QPoint at{with_flag("--t1", [&] { return BigRational::parse(o.t1); }),
              with_flag("--t2", [&] { return BigRational::parse(o.t2); }),
              {with_flag("--s", [&] { return BigRational::parse(o.s); })},
              GaussRational(with_flag("--q", [&] { return BigRational::parse(o.q); }))};
    rep = with_flag("--s", [&] { return eigen_certify(closed_form_a1n2(), at); });
  }
  std::cout << "characteristic polynomial: " << rep.char_poly.str("x") << "\n";
  std::cout << (rep.squarefree ? "squarefree: distinct eigenvalues (nonderogatory)" : "not squarefree: derogatory") << "\n";
  return rep.squarefree == expect_squarefree ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    // --config FILE is expanded in place before parsing; explicit flags win.
    for (std::size_t k = 0; k < args.size(); ++k) {
      if (args[k] != "--config") continue;
      if (k + 1 >= args.size()) throw FlagError("--config", "needs a file name");
      bool has_command = false;
      auto tokens = config_tokens(args[k + 1], has_command);
      std::vector<std::string> rest(args.begin(), args.begin() + static_cast<long>(k));
      std::vector<std::string> after(args.begin() + static_cast<long>(k) + 2, args.end());
      if (!has_command && !after.empty() && after[0].rfind("-", 0) != 0) {
        // command given on the command line: keep it first
        rest.push_back(after[0]);
        after.erase(after.begin());
      }
      rest.insert(rest.end(), tokens.begin(), tokens.end());
      rest.insert(rest.end(), after.begin(), after.end());
      args = std::move(rest);
      break;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App app{"Divisor operators of Sym^n(A_r): Hurwitz numbers, 2-point invariants, operator matrices"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::string config_unused;
  app.add_option("--config", config_unused, "JSON file with \"command\" and option values");

  HurwitzOpts ho;
  auto* hc = app.add_subcommand("hurwitz", "Hurwitz number H(profiles) or one-part double Hurwitz number");
  hc->add_option("--n", ho.n, "degree n");
  hc->add_option("--profiles", ho.profiles, "profiles separated by ';', e.g. \"2;2\"");
  hc->add_option("--backend", ho.backend, "brute, fast or gjv")->check(CLI::IsMember({"brute", "fast", "gjv"}));
  hc->add_flag("--gjv", ho.gjv, "use the sinh closed form for H(sigma, (2)^b, (k))");
  hc->add_option("--sigma", ho.sigma, "partition sigma for --gjv");
  hc->add_option("--k", ho.k, "size of sigma (checked)");
  hc->add_option("--b", ho.b, "number of simple branch points");

  TwoPointOpts to;
  auto* tc = app.add_subcommand("two-point", "Nonzero-degree part of the 2-point function");
  tc->add_option("--left", to.left, "weighted partition, e.g. \"2(E1)\"")->required();
  tc->add_option("--right", to.right, "weighted partition")->required();
  tc->add_option("--n", to.n, "n (checked against the partitions)");
  tc->add_option("--r", to.r, "rank r of A_r");
  tc->add_option("-A,--u-order", to.u_order, "u truncation order");
  tc->add_option("-D,--s-order", to.s_order, "s truncation order(s), comma separated");
  tc->add_option("--format", to.format)->check(CLI::IsMember({"json", "csv", "latex"}));
  tc->add_option("-o,--output", to.output, "output file (default stdout)");

  OpMatrixOpts mo;
  auto* mc = app.add_subcommand("op-matrix", "Matrix of a divisor operator in a basis");
  mc->add_option("--n", mo.n);
  mc->add_option("--r", mo.r);
  mc->add_option("--divisor", mo.divisor, "(2) or D<l>");
  mc->add_option("--basis", mo.basis, "basis elements (default: all weights from 1, E1..Er)");
  mc->add_option("-A,--u-order", mo.u_order);
  mc->add_option("-D,--s-order", mo.s_order);
  mc->add_option("--table", mo.table, "degree-zero table (JSON)");
  mc->add_option("--format", mo.format)->check(CLI::IsMember({"json", "csv", "latex"}));
  mc->add_option("-o,--output", mo.output);
  mc->add_flag("--closed-form", mo.closed_form, "print the exact matrix (D1, n = 2, r = 1 only)");

  VerifyOpts vo;
  auto* vc = app.add_subcommand("verify-a1n2", "Check D1 on Sym^2(A_1) against its closed form");
  vc->add_option("-A,--u-order", vo.u_order);
  vc->add_option("-D,--s-order", vo.s_order);
  vc->add_option("--table", vo.table, "degree-zero table (default: built in)");
  vc->add_option("--write-table", vo.write_table, "write the built-in table to a file");
  vc->add_flag("--latex", vo.latex, "print the closed-form matrix as LaTeX");

  EigenOpts eo;
  auto* ec = app.add_subcommand("eigencheck", "Distinct-eigenvalue certificate for D1 on Sym^2(A_1)");
  ec->add_option("--t1", eo.t1);
  ec->add_option("--t2", eo.t2);
  ec->add_option("--s", eo.s);
  ec->add_option("--q", eo.q);
  ec->add_flag("--identity", eo.identity, "negative control: the 5x5 identity matrix");

  std::vector<const char*> cargs{argv[0]};
  for (const auto& a : args) cargs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargs.size()), const_cast<char**>(cargs.data()));
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*hc) return run_hurwitz(ho);
    if (*tc) return run_two_point(to);
    if (*mc) return run_op_matrix(mo);
    if (*vc) return run_verify(vo);
    if (*ec) return run_eigencheck(eo);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
