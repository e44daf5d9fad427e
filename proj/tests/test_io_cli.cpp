#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "orlicz/io.hpp"
#include "orlicz/operators.hpp"

using namespace orlicz;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = "/tmp/orlicz_io_" + name;
  std::ofstream out(path);
  out << body;
  return path;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(ORLICZ_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

} // namespace

TEST_CASE("operator sources") {
  const auto d = load_operator("diag(3,4)");
  REQUIRE(std::holds_alternative<DiagonalOperator>(d));
  CHECK(std::get<DiagonalOperator>(d).diag().size() == 2);

  const auto b = load_operator("BERGMAN");
  REQUIRE(std::holds_alternative<AnalyticOperator>(b));
  CHECK(std::get<AnalyticOperator>(b).s(0) == doctest::Approx(0.5));

  const auto mpath = write_temp("mat.json",
                                R"({"rows":2,"cols":2,"re":[0,1,0,0],"im":[0,0,0,0]})");
  const auto m = load_operator(mpath);
  REQUIRE(std::holds_alternative<DenseOperator>(m));
  CHECK(std::get<DenseOperator>(m).matrix()(0, 1) == Complex{1, 0});

  const auto dpath =
      write_temp("diag.json", R"({"diag_re":[1,2],"diag_im":[0,-1]})");
  const auto dd = load_operator(dpath);
  REQUIRE(std::holds_alternative<DiagonalOperator>(dd));
  CHECK(std::get<DiagonalOperator>(dd).diag()[1] == Complex{2, -1});

  // "im" defaults to zeros.
  const auto m2path = write_temp("mat2.json", R"({"rows":1,"cols":1,"re":[5]})");
  CHECK(std::get<DenseOperator>(load_operator(m2path)).matrix()(0, 0) ==
        Complex{5, 0});
}

TEST_CASE("operator source errors carry distinct messages") {
  CHECK_THROWS_WITH_AS(load_operator("/nonexistent/file.json"),
                       doctest::Contains("cannot read operator file"),
                       std::invalid_argument);

  const auto badjson = write_temp("bad.json", "{not json");
  CHECK_THROWS_WITH_AS(load_operator(badjson), doctest::Contains("bad matrix file"),
                       std::invalid_argument);

  const auto mismatch =
      write_temp("mm.json", R"({"rows":2,"cols":2,"re":[1,2,3]})");
  CHECK_THROWS_WITH_AS(load_operator(mismatch),
                       doctest::Contains("dimension mismatch"),
                       std::invalid_argument);

  CHECK_THROWS_AS(load_operator("diag()"), std::invalid_argument);
  CHECK_THROWS_AS(load_operator("diag(1,x)"), std::invalid_argument);
}

TEST_CASE("json doubles round-trip at 17 significant digits") {
  for (double v : {5.0, 0.1, 1.0 / 3.0, 6.02214076e23, 1.2020569031595943,
                   -0.0, 4.9e-324}) {
    const std::string s = json_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
  CHECK(json_double(std::numeric_limits<double>::infinity()) == "null");
  CHECK(json_escape("a\"b\\c\nd") == "a\\\"b\\\\c\\nd");
}

TEST_CASE("cli: norms and exit codes") {
  const auto r = run_cli("norm --phi power:p=2 --op 'diag(3,4)'");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"luxemburg\"") != std::string::npos);
  CHECK(r.out.find("5.000000000") != std::string::npos);

  // Text and JSON agree on the rendered value.
  const auto t = run_cli("norm --phi power:p=2 --op 'diag(3,4)' --output text");
  const auto pos = r.out.find("\"value\":");
  const std::string jv = r.out.substr(pos + 8, 17);
  CHECK(t.out.find(jv.substr(0, 10)) != std::string::npos);

  CHECK(run_cli("norm --phi nope --op 'diag(1)'").exit_code == 2);
  CHECK(run_cli("norm --phi power:p=2 --op /missing.json").exit_code == 2);
  CHECK(run_cli("norm --phi power:p=2").exit_code == 2); // missing --op
  CHECK(run_cli("").exit_code == 2);                      // missing subcommand
}

TEST_CASE("cli: modular, membership, svd") {
  const auto m = run_cli("modular --phi power:p=2 --op 'diag(3,4)' --lambda 1");
  CHECK(m.exit_code == 0);
  CHECK(m.out.find("\"value\":25") != std::string::npos);

  const auto mem = run_cli("membership --phi power:p=1 --op bergman");
  CHECK(mem.exit_code == 0);
  CHECK(mem.out.find("\"in_S_phi\":false") != std::string::npos);

  const auto sv = run_cli("svd --op 'diag(3,4)'");
  CHECK(sv.exit_code == 0);
  CHECK(sv.out.find("\"values\":[4,3]") != std::string::npos);

  const auto svb = run_cli("svd --op bergman --max-terms 3");
  CHECK(svb.exit_code == 0);
  CHECK(svb.out.find("\"truncated_at\":3") != std::string::npos);
}

TEST_CASE("cli: bergman table") {
  const auto r = run_cli("bergman");
  CHECK(r.exit_code == 0); // the binary itself enforces the 1e-8 agreement
  CHECK(r.out.find("\"p\":1.5") != std::string::npos);
  CHECK(r.out.find("\"cosh_rank_one\":0.7593257175") != std::string::npos);
  CHECK(r.out.find("0.8030778709") != std::string::npos); // sqrt(zeta(2)-1)
}

TEST_CASE("cli: verify determinism and exit status") {
  const auto a = run_cli("verify --seed 42 --trials 8");
  const auto b = run_cli("verify --seed 42 --trials 8");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"passed\":true") != std::string::npos);

  const auto c = run_cli("verify --seed 7 --trials 8");
  CHECK(c.out != a.out);
  CHECK(c.exit_code == 0);
}
