// End-to-end tests that drive the installed command-line binary through a
// shell, checking exit codes and output against the library.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "test_common.hpp"
#include "xxz/json_io.hpp"

using namespace xxz;
using namespace xxz::testutil;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string out_file = "cli_test_out.txt";
  const std::string cmd =
      std::string(XXZ_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
#ifdef _WIN32
  r.code = status;
#else
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#endif
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::remove(out_file.c_str());
  return r;
}

void write_roots(const std::string& path, const RootSet& rs) {
  std::ofstream out(path);
  out << rootset_to_json(rs, 3, {1.0, 0.0});
}

}  // namespace

TEST_CASE("solve writes both reference sets") {
  auto r = run_cli("solve --sites 3 --eta 1 --starts 200 --seed 7 --out cli_roots.json");
  INFO(r.out);
  REQUIRE(r.code == 0);

  std::ifstream in("cli_roots.json");
  nlohmann::json j;
  in >> j;
  REQUIRE(j.is_array());
  bool found_u = false, found_l = false;
  for (const auto& entry : j) {
    RootFileEntry e = rootset_from_json(entry);
    CHECK(e.roots.on_shell);
    if (e.roots.same_roots(table_u_roots(), 1e-9)) found_u = true;
    if (e.roots.same_roots(table_l_roots(), 1e-9)) found_l = true;
  }
  CHECK(found_u);
  CHECK(found_l);
  std::remove("cli_roots.json");
}

TEST_CASE("solve rejects bad flags") {
  CHECK(run_cli("solve --sites 0 --eta 1").code == 64);
  CHECK(run_cli("solve").code == 64);
  CHECK(run_cli("bogus-subcommand").code == 64);
}

TEST_CASE("eval reproduces the published scalar product and form factors") {
  ChainParams p = hom3();
  write_roots("cli_l.json", polished(p, table_l_roots()));
  write_roots("cli_u.json", polished(p, table_u_roots()));

  auto scalar = run_cli("eval --kind scalar --left cli_l.json --right cli_l.json");
  INFO(scalar.out);
  CHECK(scalar.code == 0);
  CHECK(scalar.out.find("3.6257631231") != std::string::npos);

  auto sz = run_cli("eval --kind sz --site 1 --left cli_u.json --right cli_l.json");
  INFO(sz.out);
  CHECK(sz.code == 0);
  CHECK(sz.out.find("2.0095352273") != std::string::npos);

  auto mm = run_cli(
      "eval --kind mm --site 2 --left cli_l.json --right cli_l.json");
  INFO(mm.out);
  CHECK(mm.code == 0);
  CHECK(mm.out.find("1.0062709917") != std::string::npos);
}

TEST_CASE("eval enforces on-shell preconditions") {
  RootSet off = table_l_roots();
  off.roots[0] += 0.05;
  write_roots("cli_off.json", off);
  auto r = run_cli("eval --kind sz --site 1 --left cli_off.json --right cli_l.json");
  INFO(r.out);
  CHECK(r.code == 3);
  std::remove("cli_off.json");
}

TEST_CASE("eval rejects bad sites for two-point kinds") {
  auto r = run_cli("eval --kind mm --site 1 --left cli_l.json --right cli_l.json");
  CHECK(r.code == 64);
}

TEST_CASE("verify runs the suites") {
  auto r = run_cli("verify --sites 2 --trials 3 --seed 1 --suite algebra");
  INFO(r.out);
  CHECK(r.code == 0);
  CHECK(r.out.find("yang_baxter") != std::string::npos);

  CHECK(run_cli("verify --sites 13 --trials 1").code == 64);
}

TEST_CASE("tables command reproduces every table") {
  auto r = run_cli("tables --which all");
  INFO(r.out);
  CHECK(r.code == 0);
  CHECK(r.out.find("quantity,definition,formula,abs_diff") != std::string::npos);
  CHECK(r.out.find("t2.scalar_product") != std::string::npos);
  CHECK(r.out.find("t5.mm_correlator") != std::string::npos);

  // byte-for-byte stable across runs
  auto r2 = run_cli("tables --which all");
  CHECK(r.out == r2.out);

  std::remove("cli_l.json");
  std::remove("cli_u.json");
}
