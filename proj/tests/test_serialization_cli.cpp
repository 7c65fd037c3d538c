// Copyright 2026 The certreal Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "certreal/errors.hpp"
#include "certreal/serialization.hpp"

using namespace certreal;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(CERTREAL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[512];
  while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) {
    out.append(buffer, n);
    if (n < sizeof buffer) break;
  }
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("rational JSON round trip, including past 64 bits") {
  const Rational small(-3, 4);
  CHECK(rational_from_json(rational_to_json(small)) == small);
  CHECK(rational_to_json(small).dump() == "[-3,4]");
  const Rational huge(BigInt("123456789012345678901234567890"), BigInt(7));
  CHECK(rational_from_json(rational_to_json(huge)) == huge);
  CHECK_THROWS_AS(rational_from_json(Json::parse("[1]")), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json::parse("[1, \"x\"]")), ParseError);
}

TEST_CASE("polygon JSON round trip") {
  const Polygon tent = Polygon::tent();
  CHECK(polygon_from_json(polygon_to_json(tent)) == tent);
  CHECK_THROWS_AS(polygon_from_json(Json::parse("{}")), ParseError);
  CHECK_THROWS_AS(
      polygon_from_json(Json::parse(R"({"breakpoints": [[[0,1],[0,1]]]})")), ParseError);
}

TEST_CASE("certificate JSON forms") {
  const auto we = certificate_from_json(
      Json::parse(R"({"variant": "weakly_effective", "budget": [3, 2]})"));
  CHECK(std::get<WeaklyEffective>(we).budget == Rational(3, 2));
  CHECK(certificate_to_json(we)["variant"] == "weakly_effective");
  CHECK(std::holds_alternative<Increasing>(
      certificate_from_json(Json::parse(R"({"variant": "increasing"})"))));
  const auto hb =
      certificate_from_json(Json::parse(R"({"variant": "h_bounded", "h": {"kind": "linear", "slope": 2}})"));
  CHECK(std::get<HBounded>(hb).bound(3) == 6);
  CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"variant": "nope"})")), ParseError);
}

TEST_CASE("sequence and polygon sequence specs parse") {
  const IndexedSequence geo =
      sequence_from_json(Json::parse(R"({"generator": "geometric"})"));
  CHECK(geo.at(3) == Rational(1, 8));
  const IndexedSequence lit =
      sequence_from_json(Json::parse(R"({"literal": [[1,1],[1,2]]})"));
  CHECK(lit.at(0) == Rational(1));
  CHECK(lit.at(5) == Rational(1, 2));  // the last literal value repeats
  CHECK_THROWS_AS(sequence_from_json(Json::parse("{}")), ParseError);

  const PolygonSequence tents = polygon_sequence_from_json(
      Json::parse(R"({"mode": "increasing", "generator": "tent-growth"})"));
  CHECK(tents.at(2) == poly_scale(Polygon::tent(), Rational(3, 4)));
  CHECK_THROWS_AS(polygon_sequence_from_json(Json::parse(R"({"mode": "bogus"})")), ParseError);
}

TEST_CASE("adversary specs parse") {
  const auto advs = adversaries_from_json(Json::parse(R"([
    {"name": "c", "e": 1, "generator": "constant"},
    {"e": 2, "generator": "follower", "delay": 2},
    {"e": 3, "generator": "oscillator", "amplitude": [1, 2]},
    {"e": 4, "generator": "budget-burner"},
    {"e": 5, "polygons": [{"breakpoints": [[[0,1],[0,1]],[[1,1],[0,1]]]}]}
  ])"));
  CHECK(advs.size() == 5);
  CHECK(advs[0].name == "c");
  CHECK(advs[4].name == "literal");
  CHECK_THROWS_AS(adversaries_from_json(Json::parse(R"([{"generator": "constant"}])")),
                  ParseError);
}

TEST_CASE("cli: eval and dist") {
  const auto tent = write_temp("cli_tent.json", polygon_to_json(Polygon::tent()).dump());
  const auto ident = write_temp("cli_ident.json", polygon_to_json(Polygon::identity()).dump());
  CHECK(run_cli("eval " + tent.string() + " 1/4").out == "1/2\n");
  CHECK(run_cli("eval " + ident.string() + " 0").out == "0\n");
  const CliResult domain = run_cli("eval " + ident.string() + " 2");
  CHECK(domain.exit_code == 1);
  const CliResult dist = run_cli("dist " + tent.string() + " " + ident.string());
  CHECK(dist.out == "1\n");  // the gap peaks at x = 1
}

TEST_CASE("cli: audit exit codes") {
  const auto geo = write_temp("cli_geo.json", R"({"generator": "geometric"})");
  const CliResult pass =
      run_cli("audit-seq " + geo.string() + " --cert '{\"variant\":\"effective\"}' --depth 20");
  CHECK(pass.exit_code == 0);
  CHECK(pass.out.find("\"pass\": true") != std::string::npos);

  const auto alt = write_temp("cli_alt.json", R"({"generator": "alternating"})");
  const CliResult fail = run_cli(
      "audit-seq " + alt.string() +
      " --cert '{\"variant\":\"weakly_effective\",\"budget\":[3,1]}' --depth 4");
  CHECK(fail.exit_code == 2);
  CHECK(fail.out.find("\"violation_index\": 2") != std::string::npos);

  const auto bad = write_temp("cli_bad.json", "");
  CHECK(run_cli("audit-seq " + bad.string() + " --cert '{\"variant\":\"plain\"}'").exit_code == 1);
}

TEST_CASE("cli: emit formats") {
  const auto zeros =
      write_temp("cli_zeros.json", R"({"mode": "increasing", "generator": "constant"})");
  const CliResult csv = run_cli("emit " + zeros.string() + " --grid-depth 1 --format csv");
  CHECK(csv.out == "s,x,y\n0,0,0\n0,1/2,0\n0,1,0\n");
  const auto ident = write_temp(
      "cli_sid.json", R"({"mode": "increasing", "generator": "scaled-identity"})");
  const CliResult row = run_cli("emit " + ident.string() + " --grid-depth 0 --stages 2 --format csv");
  CHECK(row.out.find("1,1,1/2") != std::string::npos);  // stage 1 at x = 1
  CHECK(run_cli("emit " + zeros.string() + " --format yaml").exit_code == 1);
  const CliResult json = run_cli("emit " + zeros.string() + " --grid-depth 0 --format json");
  CHECK(Json::parse(json.out).size() == 2);
}

TEST_CASE("cli: classify and maxof") {
  const auto geo = write_temp("cli_geo2.json", R"({"generator": "geometric"})");
  CHECK(run_cli("classify-const " + geo.string() + " --cert '{\"variant\":\"increasing\"}'").out ==
        "lsc\n");
  CHECK(run_cli("classify-const " + geo.string() + " --cert '{\"variant\":\"plain\"}'").exit_code ==
        1);
  const auto tents =
      write_temp("cli_tents.json", R"({"mode": "increasing", "generator": "tent-growth"})");
  const CliResult maxima = run_cli("maxof " + tents.string() + " --depth 3");
  CHECK(maxima.out == "0\n1/2\n3/4\n");
}

TEST_CASE("cli: conversions and diagonalization run end to end") {
  const auto tents =
      write_temp("cli_tents2.json", R"({"mode": "increasing", "generator": "tent-growth"})");
  const CliResult machine =
      run_cli("convert lsc-to-machine " + tents.string() + " --input 1/2 --outputs 3");
  CHECK(machine.out == "-1\n0\n1/2\n");

  const CliResult recovered =
      run_cli("convert machine-to-lsc " + tents.string() + " --stage 1 --grid-limit 8");
  CHECK(polygon_from_json(Json::parse(recovered.out)).eval(Rational(0)) <= Rational(0));

  const auto plateau = write_temp("cli_plateau.json", R"({
    "mode": "uniform_weakly_effective", "budget": [0, 1],
    "generator": "constant", "polygon": {"breakpoints": [[[0,1],[1,4]],[[1,1],[1,4]]]}
  })");
  const CliResult uwc_machine = run_cli(
      "convert uwc " + plateau.string() + " --direction to-machine --input 1/3 --outputs 2");
  CHECK(uwc_machine.out == "1/4\n1/4\n");
  const CliResult uwc_poly = run_cli(
      "convert uwc " + plateau.string() + " --direction to-polygons --stage 2 --grid-limit 6");
  CHECK(polygon_from_json(Json::parse(uwc_poly.out)) == Polygon::constant(Rational(1, 4)));

  const auto advs = write_temp("cli_advs.json", R"([
    {"e": 1, "generator": "constant"},
    {"e": 2, "generator": "oscillator"}
  ])");
  const auto report_path = std::filesystem::temp_directory_path() / "cli_report.json";
  const CliResult diag = run_cli("diagonalize --adversaries " + advs.string() +
                                 " --stages 30 --out " + report_path.string());
  CHECK(diag.exit_code == 0);
  CHECK(diag.out.find("constant (e=1): defeated") != std::string::npos);
  CHECK(diag.out.find("oscillator (e=2): budget-exceeded") != std::string::npos);
  Json report;
  std::ifstream(report_path) >> report;
  CHECK(report["stages"] == 30);
  CHECK(report["trace"]["f"].size() == 31);
}

TEST_CASE("cli reruns are byte-identical") {
  const auto tents =
      write_temp("cli_tents3.json", R"({"mode": "increasing", "generator": "tent-growth"})");
  const std::string args = "emit " + tents.string() + " --grid-depth 3 --stages 3 --format json";
  CHECK(run_cli(args).out == run_cli(args).out);
}
