#include "circuitlab/error.hpp"
#include "circuitlab/verify.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>

using namespace circuitlab;

TEST_CASE("suite names") {
  const auto &names = suite_names();
  for (const char *s : {"matching-small", "matching-6", "matching-7", "permatch", "tsp-5",
                        "tsp-6", "tsp-7", "fstab-oracle", "fstab-walks", "nonneg-circuits"})
    CHECK(std::find(names.begin(), names.end(), s) != names.end());
  CHECK_THROWS_AS(run_suite("no-such-suite"), Error);
}

TEST_CASE("fast suites pass") {
  for (const char *s : {"tsp-5", "matching-6", "walk-invariants"}) {
    const auto r = run_suite(s);
    CHECK_MESSAGE(r.passed(), r.to_text());
    CHECK(r.suite == s);
    CHECK_FALSE(r.checks.empty());
  }
}

TEST_CASE("report formats") {
  const auto r = run_suite("tsp-5");
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["suite"] == "tsp-5");
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == r.checks.size());
  CHECK(j["checks"][0].contains("expected"));
  CHECK(j["checks"][0].contains("observed"));
  const std::string text = r.to_text();
  CHECK(text.find("tsp-5") != std::string::npos);
  CHECK(text.find(r.checks[0].description) != std::string::npos);

  VerificationReport bad{"x", {{"d", "1", "2", false, 0, false}}};
  CHECK_FALSE(bad.passed());
}
