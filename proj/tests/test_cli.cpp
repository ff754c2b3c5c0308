#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dp5/checks.hpp"

using namespace dp5;

TEST_CASE("every registered check appears exactly once in a full run") {
  std::vector<CheckReport> reports = run_checks("");
  CHECK(reports.size() == check_registry().size());
  std::set<std::string> ids;
  for (const CheckReport& r : reports) ids.insert(r.id);
  CHECK(ids.size() == reports.size());
  CHECK(all_passed(reports));
}

TEST_CASE("suites partition the registry") {
  std::size_t total = 0;
  for (const std::string& s : suite_names()) {
    std::vector<CheckReport> rs = run_checks(s);
    CHECK(!rs.empty());
    for (const CheckReport& r : rs) CHECK(r.suite == s);
    total += rs.size();
  }
  CHECK(total == check_registry().size());

  const std::vector<std::string> expected = {"basis",    "characters", "lattice",
                                             "pentagons", "quadrics",  "pfaffians",
                                             "invariants", "syzygies", "p1five"};
  CHECK(suite_names() == expected);
}

TEST_CASE("JSON report is stable and mirrors the text report") {
  std::vector<CheckReport> reports = run_checks("basis");
  nlohmann::json a = reports_to_json(reports);
  nlohmann::json b = reports_to_json(run_checks("basis"));
  CHECK(a.dump() == b.dump());  // deterministic output

  CHECK(a.contains("summary"));
  CHECK(a.contains("checks"));
  CHECK(a["summary"]["total"].get<std::size_t>() == reports.size());
  CHECK(a["summary"]["failed"].get<std::size_t>() == 0);
  for (const auto& c : a["checks"]) {
    CHECK(c.contains("check_id"));
    CHECK(c.contains("suite"));
    CHECK(c.contains("claim_ref"));
    CHECK(c.contains("status"));
    CHECK(c.contains("witness"));
    CHECK(c["status"] == "pass");
  }

  std::string text = reports_to_text(reports);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("every check cites a claim") {
  for (const CheckDef& d : check_registry()) {
    CHECK(!d.claim_ref.empty());
    CHECK(!d.suite.empty());
    CHECK(!d.id.empty());
  }
}
