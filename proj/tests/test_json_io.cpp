#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "test_common.hpp"
#include "xxz/json_io.hpp"

using namespace xxz;
using namespace xxz::testutil;

TEST_CASE("rootset JSON round trip") {
  RootSet rs = table_l_roots();
  rs.residual = 3.2e-13;
  rs.on_shell = true;
  nlohmann::json j = rootset_to_json(rs, 3, {1.0, 0.0});
  CHECK(j["n"] == 3);
  CHECK(j["roots"].size() == 3);
  CHECK(j["on_shell"] == true);

  RootFileEntry back = rootset_from_json(j);
  CHECK(back.n == 3);
  CHECK(std::abs(back.eta - Complex{1.0, 0.0}) == 0.0);
  CHECK(back.roots.same_roots(rs, 1e-15));
  CHECK(back.roots.residual == rs.residual);
}

TEST_CASE("root-count mismatch is rejected") {
  nlohmann::json j = rootset_to_json(table_l_roots(), 4, {1.0, 0.0});
  CHECK_THROWS(rootset_from_json(j));
}

TEST_CASE("load_rootset handles single objects and arrays") {
  const std::string path = "test_roots_tmp.json";
  RootSet rs = table_u_roots();
  {
    std::ofstream out(path);
    out << nlohmann::json::array({rootset_to_json(rs, 3, {1.0, 0.0}),
                                  rootset_to_json(table_l_roots(), 3, {1.0, 0.0})});
  }
  RootFileEntry first = load_rootset(path, 0);
  RootFileEntry second = load_rootset(path, 1);
  CHECK(first.roots.same_roots(rs, 1e-15));
  CHECK(second.roots.same_roots(table_l_roots(), 1e-15));

  {
    std::ofstream out(path);
    out << rootset_to_json(rs, 3, {1.0, 0.0});
  }
  CHECK(load_rootset(path).roots.same_roots(rs, 1e-15));
  std::remove(path.c_str());
}

TEST_CASE("digests are stable and input-sensitive") {
  RootSet a = table_l_roots(), b = table_l_roots();
  CHECK(digest(a.roots) == digest(b.roots));
  b.roots[0] += 1e-13;
  CHECK(digest(a.roots) != digest(b.roots));
  CHECK(digest(a.roots).size() == 16);
}

TEST_CASE("result records carry the expected fields") {
  ChainParams p = hom3();
  RootSet l = table_l_roots();
  nlohmann::json rec =
      result_record("sz", 1, Complex{0.0, 0.2}, "jet", p, l, l);
  CHECK(rec["kind"] == "sz");
  CHECK(rec["site"] == 1);
  CHECK(rec["method"] == "jet");
  CHECK(rec["value"]["im"] == 0.2);
  CHECK(rec.contains("params_digest"));
  CHECK(rec.contains("left_digest"));
  CHECK(rec.contains("right_digest"));
}

TEST_CASE("fixed-width formatting") {
  const std::string s = format_sig15(0.003625763123158);
  CHECK(s.find("3.6257631231") != std::string::npos);
  CHECK(s.find('E') == std::string::npos);  // lowercase scientific
}
