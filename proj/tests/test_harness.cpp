#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>

#include <json.hpp>

#include "ringlab/error.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/ring.hpp"

using namespace ringlab;

namespace {

  CheckResult const* find(Report const& r, std::string const& id, std::string const& ring) {
    for (auto const& c : r.results) {
      if (c.check_id == id && c.ring == ring) {
        return &c;
      }
    }
    return nullptr;
  }

  std::string write_temp(std::string const& name, std::string const& text) {
    auto path = (std::filesystem::temp_directory_path() / ("ringlab_test_" + name)).string();
    std::ofstream(path) << text;
    return path;
  }

}  // namespace

TEST_CASE("registry") {
  auto const& reg = registry();
  REQUIRE(reg.size() >= 40);
  std::set<std::string> const modules = {"ring-kernel", "structure-sets", "predicates",
                                         "derivations", "funcfield",      "harness"};
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CAPTURE(reg[i].id);
    CHECK_FALSE(reg[i].anchor.empty());
    CHECK(modules.count(reg[i].module) == 1);
    CHECK(is_registered(reg[i].id));
    if (i > 0) {
      CHECK(reg[i - 1].id < reg[i].id);
    }
  }
  CHECK_FALSE(is_registered("nosuch"));
  try {
    run_check("nosuch", default_catalog());
    FAIL("expected unknown_check");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::unknown_check);
  }
}

TEST_CASE("default catalog") {
  auto cat = default_catalog();
  CHECK(cat.size() == 17);
  CHECK(cat.front() == "Z(4)");
  CHECK(cat.back() == "M(2,FF(2))");
  for (auto const& spec : cat) {
    CHECK_NOTHROW(build_ring(spec));
  }
}

TEST_CASE("catalog files") {
  auto lines = write_temp("cat.txt", "# comment\nZ(4)\n\n  M( 2 , GF(2) )  # trailing\n");
  CHECK(load_catalog(lines) == std::vector<std::string>{"Z(4)", "M(2,GF(2))"});
  auto json = write_temp("cat.json", R"j(["GF(2)", "UT(2,GF(3))"])j");
  CHECK(load_catalog(json) == std::vector<std::string>{"GF(2)", "UT(2,GF(3))"});
  auto bad = write_temp("bad.txt", "Z(4)\nGF(6)\n");
  CHECK_THROWS_AS(load_catalog(bad), Error);
  CHECK_THROWS_AS(load_catalog("/nonexistent/catalog.txt"), Error);
  for (auto const& p : {lines, json, bad}) {
    std::remove(p.c_str());
  }
}

TEST_CASE("thm16 and the failure direction on the product ring") {
  auto report = run_check("thm16", default_catalog());
  CHECK_FALSE(report.any_failed());
  auto const* r = find(report, "thm16", "prod(M(2,GF(2)),GF(2))");
  REQUIRE(r != nullptr);
  CHECK(r->passed());
  CHECK(r->predicted == std::optional<std::string>("l([E,R])=0: false"));
  CHECK(r->observed == std::optional<std::string>("[E,R]-semiprime: false"));
  CHECK(r->sub_assertions.front().witness == "([[0,0],[0,0]],1)");

  auto const* ff = find(report, "thm16", "M(2,FF(2))");
  REQUIRE(ff != nullptr);
  CHECK(ff->verdict_text() == "skipped(non-enumerable)");
}

TEST_CASE("prop4 passes on the products") {
  auto report = run_check("prop4", default_catalog());
  CHECK_FALSE(report.any_failed());
  std::size_t passed = 0;
  for (auto const& r : report.results) {
    passed += r.passed();
  }
  CHECK(passed >= 2);
}

TEST_CASE("non-semiprime catalog skips semiprime checks") {
  auto report = run_suite({"Z(4)"}, false);
  CHECK_FALSE(report.any_failed());
  for (auto const* id : {"thm16", "thm13", "thm19", "cor12"}) {
    auto const* r = find(report, id, "Z(4)");
    REQUIRE(r != nullptr);
    CHECK(r->verdict_text() == "skipped(hypotheses unmet)");
  }
  auto const* def = find(report, "def", "Z(4)");
  REQUIRE(def != nullptr);
  CHECK(def->passed());
}

TEST_CASE("non-enumerable catalog runs only criterion-level checks") {
  auto report = run_suite({"M(2,FF(2))"}, false);
  CHECK_FALSE(report.any_failed());
  std::set<std::string> ran;
  for (auto const& r : report.results) {
    if (r.ring == "M(2,FF(2))" && r.passed()) {
      ran.insert(r.check_id);
    } else if (r.ring == "M(2,FF(2))") {
      CHECK(r.verdict_text() == "skipped(non-enumerable)");
    } else {
      CHECK(r.verdict_text() == "skipped(ring not in catalog)");
    }
  }
  CHECK(ran == std::set<std::string>{"example4", "remark10ii"});
  CHECK(exit_code(report) == 0);
}

TEST_CASE("JSON report schema and determinism") {
  std::vector<std::string> cat = {"Z(6)", "M(2,GF(2))", "UT(2,GF(2))", "prod(M(2,GF(2)),GF(2))"};
  auto a = run_suite(cat, false);
  auto b = run_suite(cat, true);
  CHECK(to_json(a, false) == to_json(b, false));

  auto doc = nlohmann::json::parse(to_json(a, false));
  CHECK(doc["version"] == 1);
  CHECK(doc["catalog"].size() == cat.size());
  REQUIRE_FALSE(doc["results"].empty());
  std::vector<std::string> keys;
  for (auto const& [k, v] : doc["results"][0].items()) {
    keys.push_back(k);
  }
  std::sort(keys.begin(), keys.end());
  CHECK(keys == std::vector<std::string>{"check_id", "ms", "observed", "predicted", "ring",
                                         "sub_assertions", "verdict"});
  for (auto const& r : doc["results"]) {
    CHECK(r["ms"].is_null());
    for (auto const& s : r["sub_assertions"]) {
      CHECK(s.contains("name"));
      CHECK(s["ok"].is_boolean());
      CHECK(s["witness"].is_string());
    }
  }
  auto timed = nlohmann::json::parse(to_json(a, true));
  CHECK(timed["results"][0]["ms"].is_number());

  for (std::size_t i = 1; i < a.results.size(); ++i) {
    auto const& p = a.results[i - 1];
    auto const& q = a.results[i];
    CHECK(std::tie(p.check_id, p.ring) < std::tie(q.check_id, q.ring));
  }

  auto table = to_table(a);
  CHECK(table.find("check") == 0);
  CHECK(table.find(" results: ") != std::string::npos);
}

TEST_CASE("coverage table lists every registry id") {
  std::ifstream in(std::string(RINGLAB_SOURCE_DIR) + "/docs/checks.md");
  REQUIRE(in);
  std::set<std::string> documented;
  std::regex const      tick("`([a-z0-9]+)`");
  std::string           line;
  std::size_t           rows = 0;
  while (std::getline(in, line)) {
    if (line.rfind("| ", 0) != 0 || line.rfind("| statement", 0) == 0) {
      continue;
    }
    ++rows;
    auto        ids_col = line.substr(line.rfind('|', line.size() - 2));
    std::size_t n       = 0;
    for (std::sregex_iterator it(ids_col.begin(), ids_col.end(), tick), end; it != end; ++it) {
      auto id = (*it)[1].str();
      CAPTURE(id);
      CHECK(is_registered(id));
      documented.insert(id);
      ++n;
    }
    CAPTURE(line);
    CHECK(n >= 1);
  }
  CHECK(rows >= 30);
  for (auto const& c : registry()) {
    CAPTURE(c.id);
    CHECK(documented.count(c.id) == 1);
  }
}
