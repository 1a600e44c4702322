#include <catch2/catch_amalgamated.hpp>

#include "kneser/report.hpp"
#include "kneser/verify.hpp"

using namespace kneser;

TEST_CASE("report envelope validates against the schema") {
  nlohmann::json report = make_report("check --pattern C6", "n=9 k=2\n", {{"free", true}}, 1.5);
  CHECK(report_schema_valid(report));
  CHECK(report["artifact"] == "kneser");
  CHECK(report["results"]["free"] == true);

  nlohmann::json broken = report;
  broken.erase("inputs_digest");
  CHECK_FALSE(report_schema_valid(broken));
  broken = report;
  broken["inputs_digest"] = "md5:nope";
  CHECK_FALSE(report_schema_valid(broken));
  CHECK_FALSE(report_schema_valid(nlohmann::json::array()));
}

TEST_CASE("digests are stable and input-sensitive") {
  CHECK(digest_string("abc") == digest_string("abc"));
  CHECK(digest_string("abc") != digest_string("abd"));
  CHECK(fnv1a("") == 0xcbf29ce484222325ull);
}

TEST_CASE("report payload is deterministic for identical inputs") {
  nlohmann::json a = make_report("gen", "g6 9 2", {{"actual_size", 7}}, 1.0);
  nlohmann::json b = make_report("gen", "g6 9 2", {{"actual_size", 7}}, 2.0);
  CHECK(a["results"] == b["results"]);
  CHECK(a["inputs_digest"] == b["inputs_digest"]);
}

TEST_CASE("verification filter narrows the grid") {
  VerifyOptions options;
  options.filter = "identities";
  auto results = run_acceptance(options);
  for (const CriterionResult& r : results) {
    if (r.name.find("identities") != std::string::npos)
      CHECK(r.rows_run > 0);
    else
      CHECK(r.rows_failed == 0);
  }
}

TEST_CASE("an injected size fault fails only the size criterion") {
  VerifyOptions options;
  options.filter = "construction-sizes";
  options.size_bias = 1;
  auto biased = run_acceptance(options);
  CHECK_FALSE(biased[0].passed());
  CHECK(biased[0].rows_failed > 0);

  options.filter = "8-formula-identities";
  auto identities = run_acceptance(options);
  CHECK(identities[7].passed());

  options.size_bias = 0;
  options.filter = "construction-sizes";
  auto clean = run_acceptance(options);
  CHECK(clean[0].passed());
}
