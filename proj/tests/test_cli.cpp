#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "cgt/catalog.hpp"
#include "cgt/reproduce.hpp"

using namespace cgt;

namespace {

std::string cli() { return CGT_CLI_PATH; }
std::string catalog_dir() {
  if (const char *env = std::getenv("CATALOG_DIR")) return env;
  return CGT_SOURCE_CATALOG_DIR;
}

int run(const std::string &args, const std::string &stdout_to = "/dev/null") {
  std::string cmd = "CATALOG_DIR=" + catalog_dir() + " " + cli() + " " + args +
                    " > " + stdout_to + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("exit codes: 0 pass, 1 failed check, 2 usage or data error") {
  CHECK(run("info aut_a6") == 0);
  CHECK(run("info missing") == 2);
  CHECK(run("nonsense") == 2);
  CHECK(run("verify table2_row10 --graph --s-arc") == 0);
  CHECK(run("reproduce gamma1") == 0);
  // order cap exceeded counts as a data error and points at verify mode
  CHECK(run("search j1") == 2);
}

TEST_CASE("tampered lattice file fails with the |E:A| record, exit 1") {
  json j = catalog_detail::read_json_file(
      std::filesystem::path(catalog_dir()) / "lattices" / "table2_row10.json");
  j["A_ref"] = "t2r10_E";  // enlarge A to E
  auto tmp = std::filesystem::temp_directory_path() / "cgt_tampered_lattice.json";
  {
    std::ofstream f(tmp);
    f << j.dump();
  }
  auto out = std::filesystem::temp_directory_path() / "cgt_tampered_out.json";
  CHECK(run("--json verify " + tmp.string(), out.string()) == 1);
  json rep = catalog_detail::read_json_file(out);
  bool found = false;
  for (const auto &c : rep["report"]["checks"])
    if (c["name"] == "|E:A| = 2" && c["pass"] == false) found = true;
  CHECK(found);
  std::filesystem::remove(tmp);
  std::filesystem::remove(out);
}

TEST_CASE("reports are byte-deterministic apart from the timing field") {
  auto o1 = std::filesystem::temp_directory_path() / "cgt_det1.json";
  auto o2 = std::filesystem::temp_directory_path() / "cgt_det2.json";
  REQUIRE(run("--json verify gamma1 --graph --s-arc --edge-primitive", o1.string()) == 0);
  REQUIRE(run("--json verify gamma1 --graph --s-arc --edge-primitive", o2.string()) == 0);
  json a = catalog_detail::read_json_file(o1);
  json b = catalog_detail::read_json_file(o2);
  CHECK(a["report"].dump() == b["report"].dump());
  CHECK(a.contains("wall_ms"));
  std::filesystem::remove(o1);
  std::filesystem::remove(o2);
}

TEST_CASE("graph export is byte-deterministic and well-formed") {
  auto dir = std::filesystem::temp_directory_path() / "cgt_graph_out";
  REQUIRE(run("--out " + dir.string() + " graph table2_row10") == 0);
  std::ifstream f(dir / "table2_row10.adj");
  std::string header;
  std::getline(f, header);
  CHECK(header == "30 45");
  std::string first_line;
  std::getline(f, first_line);
  REQUIRE(run("--out " + dir.string() + " graph table2_row10") == 0);
  std::ifstream f2(dir / "table2_row10.adj");
  std::string header2, first_line2;
  std::getline(f2, header2);
  std::getline(f2, first_line2);
  CHECK(header == header2);
  CHECK(first_line == first_line2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("seed flag changes nothing in the deterministic payload") {
  auto o1 = std::filesystem::temp_directory_path() / "cgt_seed1.json";
  auto o2 = std::filesystem::temp_directory_path() / "cgt_seed2.json";
  REQUIRE(run("--json verify table2_row04 --graph", o1.string()) == 0);
  REQUIRE(run("--json --seed 99 verify table2_row04 --graph", o2.string()) == 0);
  json a = catalog_detail::read_json_file(o1);
  json b = catalog_detail::read_json_file(o2);
  CHECK(a["report"].dump() == b["report"].dump());
  std::filesystem::remove(o1);
  std::filesystem::remove(o2);
}

TEST_CASE("reproduce manifest: skipped targets are SKIPPED, never PASS") {
  Catalog cat(catalog_dir());
  Reproducer rep(cat);
  ReproductionManifest j3 = rep.run("j3");
  CHECK(j3.verdict() == "SKIPPED");
  for (const auto &c : j3.checks) CHECK(c.status == "SKIPPED");
  // manifest verdict is the conjunction of constituent statuses
  ReproductionManifest g0 = rep.run("gamma0");
  CHECK(g0.verdict() == "PASS");
  bool all_pass = true;
  for (const auto &c : g0.checks)
    if (c.status != "PASS") all_pass = false;
  CHECK(all_pass);
}

TEST_CASE("isomorphic-to flag ties the three valency-3 rows together") {
  CHECK(run("verify table2_row04 --isomorphic-to table2_row10") == 0);
  CHECK(run("verify table2_row07 --isomorphic-to table2_row10") == 0);
  // and a failing comparison exits 1
  CHECK(run("verify table2_row01 --isomorphic-to table2_row10") == 1);
}
