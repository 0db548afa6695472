#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "tribone/cli.hpp"

using namespace tribone;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "tribone_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  file << content;
}

std::string read_file(const fs::path& path) {
  std::ifstream file(path, std::ios::binary);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("check emits verdict JSON") {
  const CliResult r = cli({"check", "26", "--symmetric"});
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 26);
  CHECK(j["symmetric"] == true);
  CHECK(j["tileable"] == true);
  CHECK(j["remainder"] == "0");
  CHECK(j["closed_form_check"] == true);

  const CliResult plain = cli({"check", "7"});
  CHECK(plain.code == 0);
  const nlohmann::json jp = nlohmann::json::parse(plain.out);
  CHECK(jp["tileable"] == false);
  CHECK(jp["remainder"] != "0");
}

TEST_CASE("check reports fixed-cell triangles as a domain error") {
  const CliResult r = cli({"check", "10", "--symmetric"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("rotation-fixed") != std::string::npos);
}

TEST_CASE("check --range walks an interval") {
  const CliResult r = cli({"check", "--range", "6..12", "--symmetric"});
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 7);
  CHECK(j[0]["n"] == 6);
  CHECK(j[0]["tileable"] == false);
  CHECK(j[1]["n"] == 7);
  CHECK(j[1].contains("error"));
  CHECK(j[4]["n"] == 10);
  CHECK(j[4].contains("error"));

  const CliResult text = cli({"check", "--range", "8..9", "--format", "text"});
  CHECK(text.code == 0);
  CHECK(count_occurrences(text.out, "tileable") == 2);
  CHECK(text.out.find("T_8 plain: tileable") != std::string::npos);
}

TEST_CASE("identical invocations give identical bytes") {
  const CliResult a = cli({"check", "--range", "5..9", "--symmetric"});
  const CliResult b = cli({"check", "--range", "5..9", "--symmetric"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const CliResult svg1 = cli({"certificate", "8", "--format", "svg"});
  const CliResult svg2 = cli({"certificate", "8", "--format", "svg"});
  CHECK(svg1.code == 0);
  CHECK(svg1.out == svg2.out);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"check"}).code == 2);
  CHECK(cli({"check", "0"}).code == 2);
  CHECK(cli({"check", "8", "--bogus"}).code == 2);
  CHECK(cli({"check", "8", "--range", "2..4"}).code == 2);
  CHECK(cli({"check", "--range", "9..2"}).code == 2);
  CHECK(cli({"certificate"}).code == 2);
  CHECK(cli({"render", "/no/such/file.json", "--out", "x.svg"}).code == 2);

  const CliResult help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("check") != std::string::npos);
  CHECK(help.out.find("selftest") != std::string::npos);
}

TEST_CASE("certificate output round trips and verifies") {
  const CliResult r = cli({"certificate", "8"});
  CHECK(r.code == 0);
  const Tiling tiling = tiling_from_json(r.out);
  CHECK(tiling.region_n == 8);
  CHECK(verify_tiling(8, tiling, false));

  const CliResult sym = cli({"certificate", "26", "--symmetric"});
  CHECK(sym.code == 0);
  const Tiling symmetric = tiling_from_json(sym.out);
  CHECK(symmetric.symmetric);
  CHECK(verify_tiling(26, symmetric, true));

  CHECK(cli({"certificate", "7"}).code == 1);
  CHECK(cli({"certificate", "8", "--symmetric"}).code == 1);
}

TEST_CASE("certificate --out writes the payload to a file") {
  const fs::path path = temp_file("cert8.json");
  const CliResult r = cli({"certificate", "8", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const Tiling tiling = tiling_from_json(read_file(path));
  CHECK(verify_tiling(8, tiling, false));
}

TEST_CASE("certificate text and svg formats") {
  const CliResult text = cli({"certificate", "9", "--format", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("T_9 plain certificate:") != std::string::npos);
  CHECK(text.out.find("placements") != std::string::npos);

  const CliResult svg = cli({"certificate", "9", "--format", "svg"});
  CHECK(svg.code == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);
  const std::size_t bars = count_occurrences(svg.out, "class=\"bar\"");
  CHECK(bars == extract_certificate(9).placements.size());
  CHECK(count_occurrences(svg.out, "class=\"cell\"") == 45);  // T_9 has 45 cells
}

TEST_CASE("render draws a verified tiling file") {
  const fs::path input = temp_file("tiling9.json");
  write_file(input, tiling_to_json(extract_certificate(9)));
  const fs::path output = temp_file("tiling9.svg");
  const CliResult r = cli({"render", input.string(), "--out", output.string()});
  CHECK(r.code == 0);
  const std::string svg = read_file(output);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count_occurrences(svg, "class=\"cell\"") == 45);

  const fs::path garbage = temp_file("garbage.json");
  write_file(garbage, "this is not json");
  CHECK(cli({"render", garbage.string(), "--out", output.string()}).code == 1);

  const fs::path wrong = temp_file("wrong.json");
  write_file(wrong, R"({"n": 2, "symmetric": false,
    "placements": [{"type":"X","center":[1,0,0],"weight":1}]})");
  CHECK(cli({"render", wrong.string(), "--out", output.string()}).code == 1);
}

TEST_CASE("groebner completes an ideal file") {
  const fs::path path = temp_file("chart_ideal.txt");
  write_file(path,
             "# the chart tribone ideal\n"
             "vars: x y\n"
             "1 + x + x^2\n"
             "1 + y + y^2\n"
             "1 + x*y + x^2*y^2\n");
  const CliResult r = cli({"groebner", path.string()});
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == "deglex");
  CHECK(j["vars"] == nlohmann::json::array({"x", "y"}));
  REQUIRE(j["basis"].size() == 4);
  CHECK(j["basis"][0] == "3*x - 3*y");
  CHECK(j["basis"][1] == "y^2 + y + 1");
  CHECK(j["basis"][2] == "x*y - x + 2*y + 1");
  CHECK(j["basis"][3] == "x^2 + x + 1");

  CHECK(cli({"groebner", path.string(), "--order", "lex"}).code == 0);
  CHECK(cli({"groebner", path.string(), "--order", "bogus"}).code == 2);

  const fs::path headless = temp_file("no_vars.txt");
  write_file(headless, "1 + x\n");
  CHECK(cli({"groebner", headless.string()}).code == 1);

  const fs::path broken = temp_file("broken_poly.txt");
  write_file(broken, "vars: x\n1 +* x\n");
  CHECK(cli({"groebner", broken.string()}).code == 1);
}

TEST_CASE("oracle subcommand reports solvability") {
  const CliResult r = cli({"oracle", "8", "--margin", "2"});
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["solvable"] == true);
  CHECK(j["window_margin"] == 2);

  const nlohmann::json j3 =
      nlohmann::json::parse(cli({"oracle", "3", "--margin", "0"}).out);
  CHECK(j3["solvable"] == false);

  CHECK(cli({"oracle", "10", "--symmetric"}).code == 1);

  const CliResult sweep = cli({"oracle", "3", "--sweep"});
  CHECK(sweep.code == 0);
  const nlohmann::json js = nlohmann::json::parse(sweep.out);
  REQUIRE(js.is_array());
  CHECK(js.size() == 2);
  CHECK(js[0]["window_margin"] == 3);
  CHECK(js[1]["window_margin"] == 4);
  CHECK(js[0]["solvable"] == js[1]["solvable"]);
}

TEST_CASE("selftest reproduces the golden tables") {
  const CliResult r = cli({"selftest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all golden tables reproduced") != std::string::npos);
  CHECK(count_occurrences(r.out, "FAIL") == 0);

  const CliResult verbose = cli({"selftest", "--verbose"});
  CHECK(verbose.code == 0);
  CHECK(count_occurrences(verbose.out, "\n") > count_occurrences(r.out, "\n"));
}

TEST_CASE("timeouts fail cleanly") {
  const CliResult r =
      cli({"check", "--range", "1..99", "--timeout-seconds", "0.000000001"});
  CHECK(r.code == 1);
  CHECK(r.err.find("timed out") != std::string::npos);

  // single work items poll the budget before starting
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"check", "26", "--timeout-seconds", "0.000000001"},
        std::vector<std::string>{"certificate", "8", "--timeout-seconds", "0.000000001"},
        std::vector<std::string>{"oracle", "8", "--timeout-seconds", "0.000000001"}}) {
    const CliResult single = cli(args);
    CHECK(single.code == 1);
    CHECK(single.err.find("timed out") != std::string::npos);
    CHECK(single.out.empty());
  }
}
