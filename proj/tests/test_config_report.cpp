#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sllab/config.hpp"
#include "sllab/report.hpp"

using namespace sllab;

TEST_CASE("key=value parsing with comments and blank lines") {
  std::istringstream in("# header\nmodel.m = 3\n\nseed=42   # trailing\nsuite = gluing\n");
  auto kv = parseKeyValues(in, "test");
  CHECK(kv.at("model.m") == "3");
  CHECK(kv.at("seed") == "42");
  CHECK(kv.at("suite") == "gluing");
}

TEST_CASE("malformed lines are reported with their location") {
  std::istringstream in("model.m = 2\nnot a pair\n");
  CHECK_THROWS_WITH(parseKeyValues(in, "cfg"), Catch::Matchers::ContainsSubstring("cfg:2"));
}

TEST_CASE("configuration application validates and rejects unknown keys") {
  ExperimentConfig cfg;
  applyConfig({{"model.m", "3"}, {"model.c1", "0.7"}, {"model.c2", "0.4"}}, cfg);
  CHECK(cfg.prm.m == 3);
  CHECK(cfg.prm.c1 == 0.7);

  ExperimentConfig bad;
  CHECK_THROWS_WITH(applyConfig({{"model.mm", "3"}}, bad),
                    Catch::Matchers::ContainsSubstring("unknown key"));
  ExperimentConfig bad2;
  CHECK_THROWS_WITH(applyConfig({{"model.c2", "0.9"}}, bad2),
                    Catch::Matchers::ContainsSubstring("c2"));
}

TEST_CASE("t-grid rebuild follows the exponent range") {
  ExperimentConfig cfg;
  applyConfig({{"t.minExp", "3"}, {"t.maxExp", "7"}}, cfg);
  REQUIRE(cfg.prm.tGrid.size() == 5);
  CHECK(cfg.prm.tGrid.front() == 0.125);
  CHECK(cfg.prm.tGrid.back() == Catch::Approx(1.0 / 128.0));
}

TEST_CASE("number formatting is locale-free and stable") {
  CHECK(formatDouble(0.5) == "0.5");
  CHECK(formatDouble(-1.0 / 3.0) == "-0.333333333333");
  CHECK(formatDouble(1e-12) == "1e-12");
  CHECK(jsonEscape("a\"b\\c") == "a\\\"b\\\\c");
}

TEST_CASE("report emission is byte-identical across repeated writes") {
  VerificationReport rep;
  rep.suite = "demo";
  rep.checks.push_back({"demo.check", "a demonstration check", 1.0, 1.0 + 1e-13, 1e-6, true,
                        false});
  NormCurve c;
  c.quantity = "epsL1_P";
  c.regionLabel = "P";
  c.m = 2;
  c.c1 = 0.5;
  c.c2 = 0.3;
  c.ts = {0.5, 0.25};
  c.values = {0.1, 0.02};
  rep.curves.push_back(c);

  namespace fs = std::filesystem;
  fs::path dir1 = fs::temp_directory_path() / "sllab_rep1";
  fs::path dir2 = fs::temp_directory_path() / "sllab_rep2";
  emitReports(rep, dir1);
  emitReports(rep, dir2);
  for (const char* name : {"demo_curves.csv", "demo_summary.json", "demo_table.txt"}) {
    std::ifstream f1(dir1 / name), f2(dir2 / name);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(!s1.str().empty());
  }
  fs::remove_all(dir1);
  fs::remove_all(dir2);
}

TEST_CASE("failure count ignores exploratory checks") {
  VerificationReport rep;
  rep.suite = "demo";
  rep.checks.push_back({"a", "", 0, 0, 0, false, true});
  rep.checks.push_back({"b", "", 0, 0, 0, false, false});
  rep.checks.push_back({"c", "", 0, 0, 0, true, false});
  CHECK(rep.failures() == 1);
}
