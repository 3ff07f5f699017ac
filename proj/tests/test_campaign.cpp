#include <catch2/catch_amalgamated.hpp>

#include "sprd/campaign.hpp"
#include "test_support.hpp"

using namespace sprd;

TEST_CASE("config validation and JSON round-trip") {
  CampaignConfig c;
  c.checks = {"key_inequality", "difference"};
  c.trials = 25;
  c.dim_lo = 3;
  c.dim_hi = 9;
  c.seed = 77;
  c.tolerance_overrides["difference"] = 1e-6;
  c.jobs = 2;

  const CampaignConfig back = campaign_config_from_json(campaign_config_to_json(c));
  CHECK(back.checks == c.checks);
  CHECK(back.trials == c.trials);
  CHECK(back.dim_lo == c.dim_lo);
  CHECK(back.dim_hi == c.dim_hi);
  CHECK(back.seed == c.seed);
  CHECK(back.tolerance_overrides == c.tolerance_overrides);
  CHECK(back.jobs == c.jobs);

  CampaignConfig bad;
  bad.trials = -1;
  CHECK_THROWS_AS(bad.validate(), invalid_input);
  bad.trials = 1;
  bad.dim_lo = 5;
  bad.dim_hi = 3;
  CHECK_THROWS_AS(bad.validate(), invalid_input);
  bad.dim_lo = 1;
  bad.dim_hi = 65;
  CHECK_THROWS_AS(bad.validate(), invalid_input);
  CHECK_THROWS_AS(campaign_config_from_json(Json{{"trials", -3}}), invalid_input);
}

TEST_CASE("registry exposes every asserting check plus the probe") {
  const auto reg = check_registry();
  const auto names = default_check_names();
  CHECK(names.size() == reg.size() - 1);  // only the probe is excluded
  for (const auto& c : reg) {
    if (c.probe)
      CHECK(std::find(names.begin(), names.end(), c.name) == names.end());
    else
      CHECK(std::find(names.begin(), names.end(), c.name) != names.end());
  }
}

TEST_CASE("zero trials yields an empty passing report") {
  CampaignConfig c;
  c.trials = 0;
  c.seed = 1;
  const ReportDocument doc = run_campaign(c);
  CHECK(doc.all_passed());
  CHECK(doc.summaries.size() == default_check_names().size());
  for (const auto& s : doc.summaries) {
    CHECK(s.trials == 0);
    CHECK(s.failures == 0);
  }
  const Json j = doc.to_json();
  CHECK(j["schema"] == 1);
  CHECK(j["passed"] == true);
  CHECK(j["tool_version"] == kToolVersion);
}

TEST_CASE("unknown check names are rejected") {
  CampaignConfig c;
  c.checks = {"key_inequality", "no_such_check"};
  c.trials = 1;
  CHECK_THROWS_AS(run_campaign(c), invalid_input);
}

TEST_CASE("small campaign passes on every check") {
  CampaignConfig c;
  c.trials = 20;
  c.dim_lo = 2;
  c.dim_hi = 6;
  c.seed = 4242;
  c.checks = default_check_names();
  c.checks.push_back("ritz_probe");
  const ReportDocument doc = run_campaign(c);
  CHECK(doc.all_passed());
  for (const auto& s : doc.summaries) {
    INFO(s.name);
    if (!s.probe) CHECK(s.failures == 0);
    CHECK(s.trials == 20);
    CHECK(s.worst_trial >= 0);
  }
}

TEST_CASE("reports are identical across worker counts") {
  CampaignConfig c;
  c.trials = 12;
  c.dim_lo = 2;
  c.dim_hi = 5;
  c.seed = 99;
  c.jobs = 1;
  Json j1 = run_campaign(c).to_json();
  c.jobs = 4;
  Json j4 = run_campaign(c).to_json();
  j1.erase("wall_time_ms");
  j4.erase("wall_time_ms");
  j1["config"].erase("jobs");
  j4["config"].erase("jobs");
  CHECK(j1.dump() == j4.dump());
}

TEST_CASE("tolerance overrides re-gate failures on the margin") {
  CampaignConfig c;
  c.checks = {"difference"};
  c.trials = 10;
  c.dim_lo = 2;
  c.dim_hi = 4;
  c.seed = 5;
  const ReportDocument base = run_campaign(c);
  REQUIRE(base.summaries[0].failures == 0);

  // An unattainable override (margin must exceed +1e9) fails every trial;
  // a loose one keeps them all passing.
  c.tolerance_overrides["difference"] = -1e9;
  CHECK(run_campaign(c).summaries[0].failures == c.trials);
  c.tolerance_overrides["difference"] = 10.0;
  CHECK(run_campaign(c).summaries[0].failures == 0);
}

TEST_CASE("probe margins are recorded even when negative") {
  CampaignConfig c;
  c.checks = {"ritz_probe"};
  c.trials = 50;
  c.dim_lo = 2;
  c.dim_hi = 8;
  c.seed = 11;
  const ReportDocument doc = run_campaign(c);
  CHECK(doc.all_passed());  // probes never gate
  CHECK(doc.summaries[0].probe);
  CHECK(std::isfinite(doc.summaries[0].min_margin));
}
