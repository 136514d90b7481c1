#include <doctest.h>
#include <json.hpp>

#include <algorithm>

#include "csym/verifier.hpp"

using namespace csym;

TEST_CASE("the check catalog is stable and reports run in catalog order") {
  std::vector<std::string> names = verifier_check_names();
  CHECK(names.size() == 16);
  CHECK(std::find(names.begin(), names.end(), "assoc") != names.end());
  CHECK(std::find(names.begin(), names.end(), "schur-duality") != names.end());

  VerifierConfig cfg;
  cfg.max_degree = 1;
  VerifierReport r = run_verifier(cfg);
  REQUIRE(r.results.size() == names.size());
  for (size_t i = 0; i < names.size(); ++i) CHECK(r.results[i].name == names[i]);
}

TEST_CASE("a small run passes every check and counts cases") {
  VerifierConfig cfg;
  cfg.alphabet = "ab";
  cfg.max_degree = 2;
  VerifierReport r = run_verifier(cfg);
  CHECK(r.all_pass);
  for (const CheckResult& c : r.results) {
    CHECK(c.pass);
    CHECK(c.cases > 0);
    CHECK(c.witness.empty());
  }
}

TEST_CASE("report text is deterministic and json is well formed") {
  VerifierConfig cfg;
  cfg.max_degree = 1;
  cfg.checks = {"assoc", "counit-laws"};
  VerifierReport a = run_verifier(cfg);
  VerifierReport b = run_verifier(cfg);
  CHECK(a.text() == b.text());
  CHECK(a.text().find("result: PASS (2/2 checks)") != std::string::npos);

  nlohmann::json j = nlohmann::json::parse(a.json_text());
  CHECK(j["alphabet"] == "ab");
  CHECK(j["max_degree"] == 1);
  CHECK(j["all_pass"] == true);
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["name"] == "assoc");
  CHECK(j["checks"][0]["pass"] == true);
}

TEST_CASE("configuration errors are refused up front") {
  VerifierConfig cfg;
  cfg.checks = {"no-such-check"};
  CHECK_THROWS_WITH_AS(run_verifier(cfg), doctest::Contains("no-such-check"),
                       std::invalid_argument);
  cfg.checks.clear();
  cfg.max_degree = -1;
  CHECK_THROWS_AS(run_verifier(cfg), std::invalid_argument);
  cfg.max_degree = 12;
  cfg.max_keys = 100;
  CHECK_THROWS_WITH_AS(run_verifier(cfg), doctest::Contains("resource guard"),
                       std::invalid_argument);
  cfg.max_degree = 1;
  cfg.max_keys = 100000;
  cfg.alphabet = "";
  CHECK_THROWS_AS(run_verifier(cfg), std::invalid_argument);
  cfg.alphabet = "aa";
  CHECK_THROWS_AS(run_verifier(cfg), std::invalid_argument);
}
