#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "orbsym/io.hpp"

using namespace orbsym;

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with a shell-quoted argument string; stdout and stderr are merged.
Run cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(ORBSYM_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "orbsym_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("hurwitz command") {
  CHECK(cli("hurwitz --n 2 --profiles '2;2'").out == "1/2\n");
  CHECK(cli("hurwitz --n 2 --profiles '2;2;2'").out == "0\n");
  CHECK(cli("hurwitz --gjv --sigma 1+1 --k 2 --b 1").out == "1/2\n");
  CHECK(cli("hurwitz --n 3 --profiles '2+1;2+1;3' --backend fast").out == cli("hurwitz --n 3 --profiles '2+1;2+1;3'").out);

  Run bad = cli("hurwitz --n 3 --profiles '2;2'");
  CHECK(bad.code == 2);
  CHECK(bad.out.find("--profiles") != std::string::npos);
  Run big = cli("hurwitz --n 9 --profiles '9;9'", "ORBSYM_MAX_N=8");
  CHECK(big.code == 3);
  CHECK(big.out.find("ORBSYM_MAX_N") != std::string::npos);
}

TEST_CASE("two-point command") {
  Run r = cli("two-point --left '2(E1)' --right '2(E1)' --r 1 -A 0 -D 3");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  Series s = series_from_json(j.at("series").dump());
  for (int d = 1; d <= 3; ++d) CHECK(s.coeff({0, d}) == RatFunc2::parse("4*t1 + 4*t2") * BigRational(1, d));
  CHECK(s.terms().size() == 3);

  Run n3 = cli("two-point --left '1(E1)+2(E1)' --right '1(E1)+2(E1)' -A 0 -D 2");
  Series s3 = series_from_json(nlohmann::json::parse(n3.out).at("series").dump());
  for (int d = 1; d <= 2; ++d) CHECK(s3.coeff({0, d}) == RatFunc2::parse("-12*t1 - 12*t2") * BigRational(1, d));

  // unit weights pair to zero with every curve class
  Run r3 = cli("two-point --left '2(1)' --right '2(1)' --r 3 -A 1 -D 1");
  REQUIRE(r3.code == 0);
  CHECK(nlohmann::json::parse(r3.out).at("series").at("terms").empty());

  Run bad = cli("two-point --left '2(E2)' --right '2(E1)' --r 1");
  CHECK(bad.code == 2);
  CHECK(bad.out.find("--left") != std::string::npos);
  CHECK(cli("two-point --left '2(E1)' --right '1(E1)' --r 1").code == 2);
  CHECK(cli("two-point --left '2(E1)' --right '2(E1)' -D 1,2").code == 2);
  CHECK(cli("two-point --left '2(Q1)' --right '2(E1)'").code == 2);
  CHECK(cli("two-point --left '2(x1)' --right '2(E1)'").code == 2);
}

TEST_CASE("verify-a1n2 command") {
  Run ok = cli("verify-a1n2 -A 6 -D 6");
  CHECK(ok.code == 0);
  CHECK(ok.out.starts_with("25/25 entries match"));
  CHECK(cli("verify-a1n2 -A 2 -D 2").code == 0);

  const auto table = scratch("table.json");
  REQUIRE(cli("verify-a1n2 -A 2 -D 2 --write-table " + table.string()).code == 0);
  CHECK(cli("verify-a1n2 -A 2 -D 2 --table " + table.string()).code == 0);

  nlohmann::ordered_json j;
  std::ifstream(table) >> j;
  j["(2(1)|D1|1(1)+1(1))"].push_back({0, "1/7"});
  const auto corrupt = scratch("corrupt.json");
  std::ofstream(corrupt) << j.dump(2);
  Run bad = cli("verify-a1n2 -A 2 -D 2 --table " + corrupt.string());
  CHECK(bad.code == 1);
  CHECK(bad.out.find("entry (4,5)") != std::string::npos);

  std::ofstream(scratch("broken.json")) << "{\"(2(1)|D1|2(1))\": 3}";
  CHECK(cli("verify-a1n2 --table " + scratch("broken.json").string()).code == 2);
}

TEST_CASE("op-matrix command") {
  const auto out = scratch("op.json");
  const auto table = scratch("table1.json");
  REQUIRE(cli("verify-a1n2 -A 1 -D 1 --write-table " + table.string()).code == 0);
  Run r = cli("op-matrix --n 2 --r 1 --divisor D1 -A 1 -D 2 --table " + table.string() + " -o " + out.string());
  REQUIRE(r.code == 0);
  std::ifstream in(out);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  OperatorMatrix m = operator_from_json(text);
  CHECK(m.size() == 5);
  CHECK(m.gaps.empty());
  CHECK(m.at(1, 1).coeff({0, 1}) == RatFunc2::parse("-4*t1 - 4*t2"));

  CHECK(cli("op-matrix --closed-form --format latex").out.find("\\frac{2}{1 - s_{1}}") != std::string::npos);
  CHECK(cli("op-matrix --format csv -A 0 -D 1").out.starts_with("row,col,a,d1,value"));
  Run twisted = cli("op-matrix --divisor '(2)' -A 1 -D 1");
  CHECK(twisted.code == 0);
  CHECK(twisted.out.find("lack degree-zero data") != std::string::npos);
  CHECK(cli("op-matrix --divisor D3 --r 1").code == 2);
  CHECK(cli("op-matrix --n 2 --r 2 -A 0 -D 1 --format csv").code == 0);
}

TEST_CASE("eigencheck command") {
  Run def = cli("eigencheck");
  CHECK(def.code == 0);
  CHECK(def.out.find("squarefree: distinct") != std::string::npos);
  Run id = cli("eigencheck --identity");
  CHECK(id.code == 0);
  CHECK(id.out.find("derogatory") != std::string::npos);
  Run pole = cli("eigencheck --s 1");
  CHECK(pole.code == 2);
  CHECK(pole.out.find("--s") != std::string::npos);
  CHECK(cli("eigencheck --t1 3 --t2 -2 --s 2/7 --q 5/3").code == 0);
  CHECK(cli("eigencheck --t1 abc").code == 2);
}

TEST_CASE("config file and usage errors") {
  const auto cfg = scratch("cfg.json");
  std::ofstream(cfg) << R"({"command": "hurwitz", "n": 2, "profiles": "2;2"})";
  CHECK(cli("--config " + cfg.string()).out == "1/2\n");
  // explicit flags override the file
  CHECK(cli("--config " + cfg.string() + " --profiles '1+1;1+1'").out == "1/2\n");
  CHECK(cli("--config " + cfg.string() + " --profiles '2;2;2'").out == "0\n");

  const auto partial = scratch("partial.json");
  std::ofstream(partial) << R"({"u-order": 2, "s-order": 2})";
  CHECK(cli("--config " + partial.string() + " verify-a1n2").code == 0);

  std::ofstream(scratch("junk.json")) << "[1,";
  CHECK(cli("--config " + scratch("junk.json").string()).code == 2);
  CHECK(cli("").code == 2);
  CHECK(cli("nonsense").code == 2);
  CHECK(cli("hurwitz --n x").code == 2);
  CHECK(cli("--help").code == 0);
}
