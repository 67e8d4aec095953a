#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_runner.hpp"
#include "doctest.h"
#include "json.hpp"
#include "qkneser/laurent.hpp"
#include "qkneser/spectrum.hpp"

using namespace qkneser;
using nlohmann::json;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("gauss command") {
  auto r = run_cli("gauss 4 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "q^4 + q^3 + 2*q^2 + q + 1\n");
  CHECK(run_cli("gauss 4 2 --q 2").out == "35\n");
  CHECK(run_cli("gauss -1 1").out == "-q^-1\n");
  CHECK(run_cli("gauss -2 1 --q 2").out == "-3/4\n");
  CHECK(run_cli("gauss 3 2 --q 6").out == "43\n");
  auto j = json::parse(run_cli("gauss 4 2 --format json").out);
  CHECK(j["value"] == "q^4 + q^3 + 2*q^2 + q + 1");
  CHECK(j["q"].is_null());
  CHECK(parse_csv(run_cli("gauss 4 2 --q 3 --format csv").out)[1] == std::vector<std::string>{"4", "2", "3", "130"});
}

TEST_CASE("gauss usage errors") {
  CHECK(run_cli("gauss 4 -1").exit_code == 2);
  CHECK(run_cli("gauss 4 2 --q 1").exit_code == 2);
  CHECK(run_cli("gauss 4").exit_code == 2);
  CHECK(run_cli("gauss four 2").exit_code == 2);
  CHECK(run_cli("gauss 4 2 --format xml").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("eigenvalues command") {
  auto r = run_cli("eigenvalues 4 2 --q 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "j  eigenvalue  multiplicity\n"
        "0  16          1\n"
        "1  -4          14\n"
        "2  2           20\n");
  auto sym = run_cli("eigenvalues 4 2 --format csv");
  auto rows = parse_csv(sym.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"j", "eigenvalue", "multiplicity"});
  CHECK(rows[1][1] == "q^4");
  CHECK(rows[2][1] == "-q^2");
  CHECK(rows[3][1] == "q");
  auto err = run_cli("eigenvalues 3 2 --q 2", true);
  CHECK(err.exit_code == 2);
  CHECK(err.out.find("null graph") != std::string::npos);
  CHECK(run_cli("eigenvalues 4 2 --q 6").exit_code == 2);
  CHECK(run_cli("eigenvalues 4 2 --form fancy").exit_code == 2);
  CHECK(run_cli("eigenvalues 4 0").exit_code == 2);
}

TEST_CASE("eigenvalue csv and json round-trip to the library tables") {
  for (auto [v, k] : std::vector<std::pair<int, int>>{{4, 2}, {7, 3}, {9, 2}}) {
    const auto table = spectrum_table(v, k);
    auto rows = parse_csv(run_cli("eigenvalues " + std::to_string(v) + " " + std::to_string(k) + " --format csv").out);
    REQUIRE(rows.size() == table.entries.size() + 1);
    for (std::size_t j = 0; j < table.entries.size(); ++j) {
      CHECK(std::stol(rows[j + 1][0]) == table.entries[j].j);
      CHECK(parse_laurent(rows[j + 1][1]) == table.entries[j].eigenvalue);
      CHECK(parse_laurent(rows[j + 1][2]) == table.entries[j].multiplicity);
    }
    const auto evaluated = spectrum_table(v, k, BigInt(3));
    auto j = json::parse(
        run_cli("eigenvalues " + std::to_string(v) + " " + std::to_string(k) + " --q 3 --format json").out);
    CHECK(j["v"] == v);
    CHECK(j["k"] == k);
    CHECK(j["q"] == 3);
    REQUIRE(j["entries"].size() == evaluated.entries.size());
    for (std::size_t t = 0; t < evaluated.entries.size(); ++t) {
      CHECK(j["entries"][t]["j"] == t);
      CHECK(BigInt(j["entries"][t]["eigenvalue"].get<long>()) == evaluated.entries[t].eigenvalue);
      CHECK(BigInt(j["entries"][t]["multiplicity"].get<long>()) == evaluated.entries[t].multiplicity);
    }
  }
}

TEST_CASE("eigenvalues --form both") {
  auto r = run_cli("eigenvalues 6 3 --form both --format json");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  for (const auto& e : j["entries"]) CHECK(e["eigenvalue"] == e["eigenvalue_delsarte"]);
  auto csv = parse_csv(run_cli("eigenvalues 5 2 --q 2 --form both --format csv").out);
  CHECK(csv[0] == std::vector<std::string>{"j", "eigenvalue", "eigenvalue_delsarte", "multiplicity"});
  for (std::size_t t = 1; t < csv.size(); ++t) CHECK(csv[t][1] == csv[t][2]);
  auto d = parse_csv(run_cli("eigenvalues 5 2 --form delsarte --format csv").out);
  CHECK(d[2][1] == "-q^3 - q^2");
}

TEST_CASE("verify identities command") {
  auto r = run_cli("verify identities --max 8");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("all identities hold") != std::string::npos);
  CHECK(run_cli("verify identities --max 1").exit_code == 0);
  auto j = json::parse(run_cli("verify identities --max 2 --format json").out);
  CHECK(j["passed"] == true);
  CHECK(j["reports"].size() == 6);
  CHECK(j["reports"][0]["identity"] == "pascal");
  CHECK(run_cli("verify identities --max 0").exit_code == 2);
  auto broken = run_cli("verify identities --max 3 --perturb-exponent 1");
  CHECK(broken.exit_code == 1);
  CHECK(broken.out.find("counterexample") != std::string::npos);
}

TEST_CASE("verify spectrum command") {
  auto r = run_cli("verify spectrum 4 2 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("result: CERTIFIED") != std::string::npos);
  CHECK(r.out.find("tr(A^2) = 560") != std::string::npos);
  auto over = run_cli("verify spectrum 6 3 2 --budget 100", true);
  CHECK(over.exit_code == 2);
  CHECK(over.out.find("predicted 1395 > 100") != std::string::npos);
  auto gf4 = json::parse(run_cli("verify spectrum 4 2 4 --format json").out);
  CHECK(gf4["certified"] == true);
  CHECK(gf4["vertex_count"] == 357);
  CHECK(run_cli("verify spectrum 3 2 2").exit_code == 2);
  CHECK(run_cli("verify spectrum 4 2 6").exit_code == 2);
  CHECK(run_cli("verify spectrum 2 0 2").exit_code == 2);
}

TEST_CASE("verify spectrum --dump") {
  auto dir = std::filesystem::temp_directory_path() / "qkneser_dump_test";
  std::filesystem::remove_all(dir);
  auto r = run_cli("verify spectrum 2 1 3 --dump " + dir.string());
  CHECK(r.exit_code == 0);
  std::ifstream vf(dir / "vertices.txt");
  std::stringstream vs;
  vs << vf.rdbuf();
  CHECK(vs.str() == "1 0\n1 1\n1 2\n0 1\n");
  std::ifstream af(dir / "adjacency.txt");
  std::stringstream as;
  as << af.rdbuf();
  CHECK(as.str() == "0 1 1 1\n1 0 1 1\n1 1 0 1\n1 1 1 0\n");
  std::ifstream cf(dir / "certification.json");
  auto j = json::parse(cf);
  CHECK(j["certified"] == true);
  std::filesystem::remove_all(dir);
}

TEST_CASE("count-subspaces command") {
  CHECK(run_cli("count-subspaces 4 2 2").out == "35 = 35\n");
  CHECK(run_cli("count-subspaces 3 1 2").out == "7 = 7\n");
  auto r = run_cli("count-subspaces 5 2 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1210 = 1210\n");
  CHECK(run_cli("count-subspaces 3 2 9").out == "91 = 91\n");
  CHECK(run_cli("count-subspaces 6 3 2 --budget 10").exit_code == 2);
  CHECK(run_cli("count-subspaces 2 3 2").exit_code == 2);
}
